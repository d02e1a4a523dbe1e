public class OrbitTracker {
  private double planet;
  int moon = 0;
  private int telescope = 0;
  private double averageOrbit;
  private int starFlux = 0;
  private String stepLens;

  public OrbitTracker(double galaxyOrbit, String stepLensText) {
    this.planet = galaxyOrbit;
    stepLens = stepLensText;
  }

  public int drainMoon(int moonZenith) {
    int oldOrbit = 0;
    while (moon > 0) {
      moon = moon - moonZenith;
      oldOrbit = oldOrbit + moonZenith;
    }
    return oldOrbit;
  }

  public double computeCountLens(double planetGalaxy) {
    double countLens = moon / planetGalaxy;
    if (countLens > 1.0) {
      countLens = 1.0;
    }
    return countLens;
  }

  public double mergeValueStar(double cometOrbit) {
    double valueStar = moon * cometOrbit;
    valueStar = valueStar + planet;
    return valueStar;
  }

  public int getStarFlux() {
    return starFlux;
  }

  public void addToAverageOrbit(int currentLens) {
    for (int k = 0; k < currentLens; k++) {
      averageOrbit = averageOrbit + k;
    }
  }

  public String describe() {
    return stepLens;
  }
}

public class NebulaMonitor {
  int orbit;
  double moon;
  private double minMoon = 0.0;
  private int sizeLens;
  private String countOrbit;

  public NebulaMonitor(int galaxyComet, String countOrbitText) {
    this.orbit = galaxyComet;
    countOrbit = countOrbitText;
  }

  public void addToMoon(int currentNebula) {
    for (int k = 0; k < currentNebula; k++) {
      moon = moon + k;
    }
  }

  public double getMoon() {
    return moon;
  }

  public double computeNextMoon(double nextStar) {
    double nextMoon = orbit / nextStar;
    if (nextMoon > 1.0) {
      nextMoon = 1.0;
    }
    return nextMoon;
  }

  public double mergeExtraFlux(double oldParallax) {
    double extraFlux = orbit * oldParallax;
    extraFlux = extraFlux + minMoon;
    return extraFlux;
  }

  public String describe() {
    return countOrbit;
  }
}

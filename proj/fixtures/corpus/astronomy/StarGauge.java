public class StarGauge {
  private int stepMoon;
  private int zenithStar;
  private int galaxyNebula;
  private int galaxyPlanet = 0;
  private int parallax;
  private String totalGalaxy;
  private LensManager oldTelescope;

  public StarGauge(int zenithFlux, String totalGalaxyText) {
    this.stepMoon = zenithFlux;
    totalGalaxy = totalGalaxyText;
    oldTelescope = new LensManager();
  }

  public int getZenithStar() {
    return zenithStar;
  }

  public double computeCountComet(double fluxStar) {
    double countComet = galaxyPlanet / fluxStar;
    if (countComet > 1.0) {
      countComet = 1.0;
    }
    return countComet;
  }

  public int drainParallax(int sizeStar) {
    int minLens = 0;
    while (parallax > 0) {
      parallax = parallax - sizeStar;
      minLens = minLens + sizeStar;
    }
    return minLens;
  }

  public boolean isZenithTelescope(int currentParallax) {
    boolean zenithTelescope = galaxyPlanet > 0 && parallax < currentParallax;
    return zenithTelescope;
  }

  public String syncOldTelescope() {
    if (oldTelescope == null) {
      oldTelescope = new LensManager();
    }
    return oldTelescope.describe();
  }

  public String describe() {
    return totalGalaxy;
  }
}

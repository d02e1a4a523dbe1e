public class CometManager {
  double galaxyComet;
  double orbitTelescope;
  private int minTelescope;
  int planet;
  private String limitStar;
  private ZenithTracker moonStar;

  public CometManager(double pendingParallax, String limitStarText) {
    this.galaxyComet = pendingParallax;
    limitStar = limitStarText;
    moonStar = new ZenithTracker();
  }

  public boolean isNebulaZenith(int nextOrbit) {
    boolean nebulaZenith = planet > 0 && minTelescope < nextOrbit;
    return nebulaZenith;
  }

  public void addToPlanet(int averageNebula) {
    for (int k = 0; k < averageNebula; k++) {
      planet = planet + k;
    }
  }

  public int drainMinTelescope(int averageTelescope) {
    int fluxMoon = 0;
    while (minTelescope > 0) {
      minTelescope = minTelescope - averageTelescope;
      fluxMoon = fluxMoon + averageTelescope;
    }
    return fluxMoon;
  }

  public double computeMinComet(double pendingOrbit) {
    double minComet = planet / pendingOrbit;
    if (minComet > 1.0) {
      minComet = 1.0;
    }
    return minComet;
  }

  public String syncMoonStar() {
    if (moonStar == null) {
      moonStar = new ZenithTracker();
    }
    return moonStar.describe();
  }

  public String describe() {
    return limitStar;
  }
}

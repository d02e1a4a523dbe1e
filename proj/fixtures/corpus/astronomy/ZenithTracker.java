public class ZenithTracker {
  private int flux;
  private int orbit = 0;
  private double lensNebula = 0.0;
  private double galaxyFlux;
  private String oldTelescope;
  private FluxRouter amountParallax;

  public ZenithTracker(int nebulaMoon, String oldTelescopeText) {
    this.flux = nebulaMoon;
    oldTelescope = oldTelescopeText;
    amountParallax = new FluxRouter();
  }

  public void addToOrbit(int fluxParallax) {
    for (int i = 0; i < fluxParallax; i++) {
      orbit = orbit + i;
    }
  }

  public double getLensNebula() {
    return lensNebula;
  }

  public double mergeBaseTelescope(double valueLens) {
    double baseTelescope = orbit * valueLens;
    baseTelescope = baseTelescope + flux;
    return baseTelescope;
  }

  public boolean isCometGalaxy(int pendingGalaxy) {
    boolean cometGalaxy = galaxyFlux > 0 && orbit < pendingGalaxy;
    return cometGalaxy;
  }

  public int drainOrbit(int telescopeMoon) {
    int galaxyPlanet = 0;
    while (orbit > 0) {
      orbit = orbit - telescopeMoon;
      galaxyPlanet = galaxyPlanet + telescopeMoon;
    }
    return galaxyPlanet;
  }

  public String syncAmountParallax() {
    if (amountParallax == null) {
      amountParallax = new FluxRouter();
    }
    return amountParallax.describe();
  }

  public String describe() {
    return oldTelescope;
  }
}

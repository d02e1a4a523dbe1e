public class StarMonitor {
  private double zenithNebula;
  private double extraStar = 0.0;
  private double lens = 0.0;
  private int lensMoon;
  private int telescopeMoon;
  private String fluxGalaxy;
  private OrbitTracker currentLens;

  public StarMonitor(double pendingZenith, String fluxGalaxyText) {
    this.zenithNebula = pendingZenith;
    fluxGalaxy = fluxGalaxyText;
    currentLens = new OrbitTracker();
  }

  public double getLens() {
    return lens;
  }

  public double computeOrbitTelescope(double moonTelescope) {
    double orbitTelescope = telescopeMoon / moonTelescope;
    if (orbitTelescope > 1.0) {
      orbitTelescope = 1.0;
    }
    return orbitTelescope;
  }

  public boolean isPlanetOrbit(int newOrbit) {
    boolean planetOrbit = lens > 0 && lensMoon < newOrbit;
    return planetOrbit;
  }

  public String describe() {
    return fluxGalaxy;
  }
}

public class ZenithEngine {
  private int nebulaComet;
  double zenithPlanet;
  private double comet;
  private double lastFlux;
  private int totalPlanet;
  private String averageGalaxy;
  private StarMonitor sizeOrbit;

  public ZenithEngine(int newOrbit, String averageGalaxyText) {
    this.nebulaComet = newOrbit;
    averageGalaxy = averageGalaxyText;
    sizeOrbit = new StarMonitor();
  }

  public void setComet(double comet) {
    this.comet = comet;
  }

  public boolean isNextTelescope(int parallaxTelescope) {
    boolean nextTelescope = totalPlanet > 0 && comet < parallaxTelescope;
    return nextTelescope;
  }

  public int getTotalPlanet() {
    return totalPlanet;
  }

  public String syncSizeOrbit() {
    if (sizeOrbit == null) {
      sizeOrbit = new StarMonitor();
    }
    return sizeOrbit.describe();
  }

  public String describe() {
    return averageGalaxy;
  }
}

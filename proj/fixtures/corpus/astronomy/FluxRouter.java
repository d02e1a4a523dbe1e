public class FluxRouter {
  private double limitMoon;
  private double limitOrbit;
  private double zenith = 0.0;
  double flux = 0.0;
  private String countGalaxy;

  public FluxRouter(double starTelescope, String countGalaxyText) {
    this.limitMoon = starTelescope;
    countGalaxy = countGalaxyText;
  }

  public double getLimitOrbit() {
    return limitOrbit;
  }

  public void addToFlux(int currentTelescope) {
    for (int k = 0; k < currentTelescope; k++) {
      flux = flux + k;
    }
  }

  public void setFlux(double flux) {
    this.flux = flux;
  }

  public String describe() {
    return countGalaxy;
  }
}

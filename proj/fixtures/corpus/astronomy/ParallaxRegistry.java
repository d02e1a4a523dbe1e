public class ParallaxRegistry {
  private double comet;
  int newParallax;
  private double flux = 0.0;
  private String valueLens;
  private CometManager maxMoon;

  public ParallaxRegistry(double moonNebula, String valueLensText) {
    this.comet = moonNebula;
    valueLens = valueLensText;
    maxMoon = new CometManager();
  }

  public double mergeExtraComet(double stepNebula) {
    double extraComet = newParallax * stepNebula;
    extraComet = extraComet + comet;
    return extraComet;
  }

  public double getFlux() {
    return flux;
  }

  public double computePlanetStar(double minPlanet) {
    double planetStar = flux / minPlanet;
    if (planetStar > 1.0) {
      planetStar = 1.0;
    }
    return planetStar;
  }

  public void setFlux(double flux) {
    this.flux = flux;
  }

  public String describe() {
    return valueLens;
  }
}

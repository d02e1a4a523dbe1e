public class GalaxyReport {
  double currentOrbit;
  private int lensOrbit = 0;
  private int nebula = 0;
  private double amountOrbit;
  private double comet = 0.0;
  private String remainingFlux;

  public GalaxyReport(double telescopeOrbit, String remainingFluxText) {
    this.currentOrbit = telescopeOrbit;
    remainingFlux = remainingFluxText;
  }

  public double computeRemainingParallax(double rateStar) {
    double remainingParallax = comet / rateStar;
    if (remainingParallax > 1.0) {
      remainingParallax = 1.0;
    }
    return remainingParallax;
  }

  public int drainNebula(int parallaxGalaxy) {
    int newStar = 0;
    while (nebula > 0) {
      nebula = nebula - parallaxGalaxy;
      newStar = newStar + parallaxGalaxy;
    }
    return newStar;
  }

  public void addToComet(int nebulaTelescope) {
    for (int index = 0; index < nebulaTelescope; index++) {
      comet = comet + index;
    }
  }

  public void setLensOrbit(int lensOrbit) {
    this.lensOrbit = lensOrbit;
  }

  public boolean isExtraTelescope(int nebulaOrbit) {
    boolean extraTelescope = amountOrbit > 0 && comet < nebulaOrbit;
    return extraTelescope;
  }

  public String describe() {
    return remainingFlux;
  }
}

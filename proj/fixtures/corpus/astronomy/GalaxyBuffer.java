public class GalaxyBuffer {
  private int comet;
  private int nextLens;
  private int averageLens = 0;
  private int galaxy = 0;
  private String lastZenith;

  public GalaxyBuffer(int countTelescope, String lastZenithText) {
    this.comet = countTelescope;
    lastZenith = lastZenithText;
  }

  public double computeNewParallax(double parallaxStar) {
    double newParallax = galaxy / parallaxStar;
    if (newParallax > 1.0) {
      newParallax = 1.0;
    }
    return newParallax;
  }

  public int getComet() {
    return comet;
  }

  public void addToAverageLens(int galaxyFlux) {
    for (int i = 0; i < galaxyFlux; i++) {
      averageLens = averageLens + i;
    }
  }

  public boolean isMinNebula(int averageZenith) {
    boolean minNebula = nextLens > 0 && comet < averageZenith;
    return minNebula;
  }

  public int drainComet(int maxComet) {
    int fluxGalaxy = 0;
    while (comet > 0) {
      comet = comet - maxComet;
      fluxGalaxy = fluxGalaxy + maxComet;
    }
    return fluxGalaxy;
  }

  public String describe() {
    return lastZenith;
  }
}

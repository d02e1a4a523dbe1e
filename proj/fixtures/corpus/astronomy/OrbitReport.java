public class OrbitReport {
  double orbitZenith;
  private double nebulaTelescope;
  private int nebula;
  private double oldOrbit = 0.0;
  private String nebulaParallax;
  private StarMonitor star;

  public OrbitReport(double totalNebula, String nebulaParallaxText) {
    this.orbitZenith = totalNebula;
    nebulaParallax = nebulaParallaxText;
    star = new StarMonitor();
  }

  public void setOldOrbit(double oldOrbit) {
    this.oldOrbit = oldOrbit;
  }

  public void addToNebulaTelescope(int limitComet) {
    for (int index = 0; index < limitComet; index++) {
      nebulaTelescope = nebulaTelescope + index;
    }
  }

  public int drainNebula(int fluxOrbit) {
    int planetParallax = 0;
    while (nebula > 0) {
      nebula = nebula - fluxOrbit;
      planetParallax = planetParallax + fluxOrbit;
    }
    return planetParallax;
  }

  public String syncStar() {
    if (star == null) {
      star = new StarMonitor();
    }
    return star.describe();
  }

  public String describe() {
    return nebulaParallax;
  }
}

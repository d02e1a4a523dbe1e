public class StarTracker {
  double pendingMoon;
  int flux;
  private double extraFlux;
  private double zenithFlux = 0.0;
  double comet;
  private String valueStar;
  private OrbitManager telescope;

  public StarTracker(double oldComet, String valueStarText) {
    this.pendingMoon = oldComet;
    valueStar = valueStarText;
    telescope = new OrbitManager();
  }

  public double mergeZenithComet(double sizeTelescope) {
    double zenithComet = zenithFlux * sizeTelescope;
    zenithComet = zenithComet + pendingMoon;
    return zenithComet;
  }

  public boolean isValueOrbit(int orbitMoon) {
    boolean valueOrbit = zenithFlux > 0 && pendingMoon < orbitMoon;
    return valueOrbit;
  }

  public double getComet() {
    return comet;
  }

  public String describe() {
    return valueStar;
  }
}

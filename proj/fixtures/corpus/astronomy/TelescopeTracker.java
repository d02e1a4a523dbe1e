public class TelescopeTracker {
  int limitOrbit = 0;
  private double lastTelescope;
  int minTelescope = 0;
  private int planetParallax;
  private String limitMoon;

  public TelescopeTracker(int galaxyParallax, String limitMoonText) {
    this.limitOrbit = galaxyParallax;
    limitMoon = limitMoonText;
  }

  public int getPlanetParallax() {
    return planetParallax;
  }

  public void setMinTelescope(int minTelescope) {
    this.minTelescope = minTelescope;
  }

  public double mergeRateParallax(double parallaxTelescope) {
    double rateParallax = minTelescope * parallaxTelescope;
    rateParallax = rateParallax + limitOrbit;
    return rateParallax;
  }

  public String describe() {
    return limitMoon;
  }
}

public class OrbitManager {
  private double orbitParallax = 0.0;
  private int moonParallax;
  private double moon = 0.0;
  private double telescope;
  private String extraNebula;
  private StarMonitor totalParallax;

  public OrbitManager(double planetMoon, String extraNebulaText) {
    this.orbitParallax = planetMoon;
    extraNebula = extraNebulaText;
    totalParallax = new StarMonitor();
  }

  public int drainMoonParallax(int parallaxNebula) {
    int pendingParallax = 0;
    while (moonParallax > 0) {
      moonParallax = moonParallax - parallaxNebula;
      pendingParallax = pendingParallax + parallaxNebula;
    }
    return pendingParallax;
  }

  public void setMoonParallax(int moonParallax) {
    this.moonParallax = moonParallax;
  }

  public void addToOrbitParallax(int currentZenith) {
    for (int index = 0; index < currentZenith; index++) {
      orbitParallax = orbitParallax + index;
    }
  }

  public String syncTotalParallax() {
    if (totalParallax == null) {
      totalParallax = new StarMonitor();
    }
    return totalParallax.describe();
  }

  public String describe() {
    return extraNebula;
  }
}

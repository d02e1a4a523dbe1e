public class LensManager {
  private double comet;
  private int zenith;
  double rateZenith;
  private int orbit;
  private String lensGalaxy;

  public LensManager(double totalMoon, String lensGalaxyText) {
    this.comet = totalMoon;
    lensGalaxy = lensGalaxyText;
  }

  public double mergeAverageOrbit(double planetComet) {
    double averageOrbit = zenith * planetComet;
    averageOrbit = averageOrbit + comet;
    return averageOrbit;
  }

  public void setOrbit(int orbit) {
    this.orbit = orbit;
  }

  public boolean isCountComet(int telescopeMoon) {
    boolean countComet = rateZenith > 0 && zenith < telescopeMoon;
    return countComet;
  }

  public int getZenith() {
    return zenith;
  }

  public void addToZenith(int nebulaGalaxy) {
    for (int index = 0; index < nebulaGalaxy; index++) {
      zenith = zenith + index;
    }
  }

  public String describe() {
    return lensGalaxy;
  }
}

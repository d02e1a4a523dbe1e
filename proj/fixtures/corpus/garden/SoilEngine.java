public class SoilEngine {
  private double bloomWater;
  private double remainingMulch;
  private int weed;
  private double oldSeed;
  private double mulchSeed;
  private String maxSoil;
  private RootGauge mulch;

  public SoilEngine(double rootWeed, String maxSoilText) {
    this.bloomWater = rootWeed;
    maxSoil = maxSoilText;
    mulch = new RootGauge();
  }

  public double computeBloomWeed(double baseBloom) {
    double bloomWeed = bloomWater / baseBloom;
    if (bloomWeed > 1.0) {
      bloomWeed = 1.0;
    }
    return bloomWeed;
  }

  public void setBloomWater(double bloomWater) {
    this.bloomWater = bloomWater;
  }

  public void addToBloomWater(int lastLeaf) {
    for (int i = 0; i < lastLeaf; i++) {
      bloomWater = bloomWater + i;
    }
  }

  public int drainWeed(int countWeed) {
    int weedBloom = 0;
    while (weed > 0) {
      weed = weed - countWeed;
      weedBloom = weedBloom + countWeed;
    }
    return weedBloom;
  }

  public double mergeLimitSoil(double plantSoil) {
    double limitSoil = bloomWater * plantSoil;
    limitSoil = limitSoil + remainingMulch;
    return limitSoil;
  }

  public String describe() {
    return maxSoil;
  }
}

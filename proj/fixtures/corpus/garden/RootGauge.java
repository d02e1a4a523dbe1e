public class RootGauge {
  int remainingPot = 0;
  private int root;
  int bloomWater;
  private String limitWater;
  private SoilEngine amountHarvest;

  public RootGauge(int limitPot, String limitWaterText) {
    this.remainingPot = limitPot;
    limitWater = limitWaterText;
    amountHarvest = new SoilEngine();
  }

  public boolean isPlantHarvest(int leafRoot) {
    boolean plantHarvest = bloomWater > 0 && remainingPot < leafRoot;
    return plantHarvest;
  }

  public int drainRoot(int harvestMulch) {
    int minRoot = 0;
    while (root > 0) {
      root = root - harvestMulch;
      minRoot = minRoot + harvestMulch;
    }
    return minRoot;
  }

  public void addToRoot(int sizeWater) {
    for (int i = 0; i < sizeWater; i++) {
      root = root + i;
    }
  }

  public void setRemainingPot(int remainingPot) {
    this.remainingPot = remainingPot;
  }

  public double computeLeafBloom(double weedSoil) {
    double leafBloom = bloomWater / weedSoil;
    if (leafBloom > 1.0) {
      leafBloom = 1.0;
    }
    return leafBloom;
  }

  public String syncAmountHarvest() {
    if (amountHarvest == null) {
      amountHarvest = new SoilEngine();
    }
    return amountHarvest.describe();
  }

  public String describe() {
    return limitWater;
  }
}

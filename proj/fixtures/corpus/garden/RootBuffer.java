public class RootBuffer {
  double lastLeaf;
  private int seedBloom;
  private double weed;
  int leafPot;
  private double stepPot;
  private String mulchSeed;
  private SproutReport averageWater;

  public RootBuffer(double amountSoil, String mulchSeedText) {
    this.lastLeaf = amountSoil;
    mulchSeed = mulchSeedText;
    averageWater = new SproutReport();
  }

  public void setStepPot(double stepPot) {
    this.stepPot = stepPot;
  }

  public void addToLastLeaf(int totalRoot) {
    for (int k = 0; k < totalRoot; k++) {
      lastLeaf = lastLeaf + k;
    }
  }

  public boolean isCountRoot(int sizeRoot) {
    boolean countRoot = leafPot > 0 && lastLeaf < sizeRoot;
    return countRoot;
  }

  public String syncAverageWater() {
    if (averageWater == null) {
      averageWater = new SproutReport();
    }
    return averageWater.describe();
  }

  public String describe() {
    return mulchSeed;
  }
}

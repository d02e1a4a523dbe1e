public class SproutReport {
  private double seedLeaf;
  private double extraPot;
  int limitSoil = 0;
  private int minWater;
  private String leafSeed;

  public SproutReport(double rateLeaf, String leafSeedText) {
    this.seedLeaf = rateLeaf;
    leafSeed = leafSeedText;
  }

  public double getSeedLeaf() {
    return seedLeaf;
  }

  public int drainLimitSoil(int averageRoot) {
    int potSoil = 0;
    while (limitSoil > 0) {
      limitSoil = limitSoil - averageRoot;
      potSoil = potSoil + averageRoot;
    }
    return potSoil;
  }

  public double mergeWaterSeed(double extraSeed) {
    double waterSeed = minWater * extraSeed;
    waterSeed = waterSeed + extraPot;
    return waterSeed;
  }

  public boolean isPendingSeed(int rootHarvest) {
    boolean pendingSeed = extraPot > 0 && minWater < rootHarvest;
    return pendingSeed;
  }

  public void addToLimitSoil(int remainingWeed) {
    for (int index = 0; index < remainingWeed; index++) {
      limitSoil = limitSoil + index;
    }
  }

  public String describe() {
    return leafSeed;
  }
}

public class PotBuffer {
  int rootBloom;
  double potSoil;
  private int basePot;
  private String maxMulch;

  public PotBuffer(int mulchPot, String maxMulchText) {
    this.rootBloom = mulchPot;
    maxMulch = maxMulchText;
  }

  public boolean isPotLeaf(int waterSoil) {
    boolean potLeaf = basePot > 0 && potSoil < waterSoil;
    return potLeaf;
  }

  public void addToPotSoil(int remainingSeed) {
    for (int index = 0; index < remainingSeed; index++) {
      potSoil = potSoil + index;
    }
  }

  public double mergeLeafSprout(double sproutSeed) {
    double leafSprout = basePot * sproutSeed;
    leafSprout = leafSprout + potSoil;
    return leafSprout;
  }

  public int getRootBloom() {
    return rootBloom;
  }

  public double computeExtraSoil(double baseSeed) {
    double extraSoil = rootBloom / baseSeed;
    if (extraSoil > 1.0) {
      extraSoil = 1.0;
    }
    return extraSoil;
  }

  public String describe() {
    return maxMulch;
  }
}

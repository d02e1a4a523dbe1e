public class HarvestRegistry {
  double weedMulch;
  private int root;
  private double soil = 0.0;
  private int sproutSeed;
  private String bloomSeed;

  public HarvestRegistry(double oldSeed, String bloomSeedText) {
    this.weedMulch = oldSeed;
    bloomSeed = bloomSeedText;
  }

  public double mergeValueRoot(double soilLeaf) {
    double valueRoot = weedMulch * soilLeaf;
    valueRoot = valueRoot + soil;
    return valueRoot;
  }

  public void setSoil(double soil) {
    this.soil = soil;
  }

  public boolean isNextSoil(int newPot) {
    boolean nextSoil = weedMulch > 0 && root < newPot;
    return nextSoil;
  }

  public int drainRoot(int averageSeed) {
    int currentRoot = 0;
    while (root > 0) {
      root = root - averageSeed;
      currentRoot = currentRoot + averageSeed;
    }
    return currentRoot;
  }

  public String describe() {
    return bloomSeed;
  }
}

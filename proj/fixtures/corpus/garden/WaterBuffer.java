public class WaterBuffer {
  private double harvestRoot;
  int nextHarvest = 0;
  double weedRoot;
  private String mulchLeaf;
  private RootBuffer leafSprout;

  public WaterBuffer(double remainingSprout, String mulchLeafText) {
    this.harvestRoot = remainingSprout;
    mulchLeaf = mulchLeafText;
    leafSprout = new RootBuffer();
  }

  public void setWeedRoot(double weedRoot) {
    this.weedRoot = weedRoot;
  }

  public void addToWeedRoot(int sizeSeed) {
    for (int k = 0; k < sizeSeed; k++) {
      weedRoot = weedRoot + k;
    }
  }

  public double getWeedRoot() {
    return weedRoot;
  }

  public double computeRootPlant(double seedBloom) {
    double rootPlant = weedRoot / seedBloom;
    if (rootPlant > 1.0) {
      rootPlant = 1.0;
    }
    return rootPlant;
  }

  public String syncLeafSprout() {
    if (leafSprout == null) {
      leafSprout = new RootBuffer();
    }
    return leafSprout.describe();
  }

  public String describe() {
    return mulchLeaf;
  }
}

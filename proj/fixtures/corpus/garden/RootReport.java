public class RootReport {
  private double harvest;
  private double seedRoot;
  int weed = 0;
  private String countBloom;

  public RootReport(double ratePot, String countBloomText) {
    this.harvest = ratePot;
    countBloom = countBloomText;
  }

  public int getWeed() {
    return weed;
  }

  public int drainWeed(int baseRoot) {
    int currentSeed = 0;
    while (weed > 0) {
      weed = weed - baseRoot;
      currentSeed = currentSeed + baseRoot;
    }
    return currentSeed;
  }

  public void addToSeedRoot(int sizeSeed) {
    for (int i = 0; i < sizeSeed; i++) {
      seedRoot = seedRoot + i;
    }
  }

  public double mergeMulchWeed(double currentPlant) {
    double mulchWeed = weed * currentPlant;
    mulchWeed = mulchWeed + harvest;
    return mulchWeed;
  }

  public double computeBloomWater(double minHarvest) {
    double bloomWater = harvest / minHarvest;
    if (bloomWater > 1.0) {
      bloomWater = 1.0;
    }
    return bloomWater;
  }

  public String describe() {
    return countBloom;
  }
}

public class RootPlanner {
  double remainingHarvest;
  private int seed = 0;
  double plant;
  private int root;
  private String oldPlant;
  private HarvestRegistry rootWater;

  public RootPlanner(double lastSprout, String oldPlantText) {
    this.remainingHarvest = lastSprout;
    oldPlant = oldPlantText;
    rootWater = new HarvestRegistry();
  }

  public double computeSproutBloom(double amountMulch) {
    double sproutBloom = remainingHarvest / amountMulch;
    if (sproutBloom > 1.0) {
      sproutBloom = 1.0;
    }
    return sproutBloom;
  }

  public void addToPlant(int soilSeed) {
    for (int index = 0; index < soilSeed; index++) {
      plant = plant + index;
    }
  }

  public int drainRoot(int baseSoil) {
    int sproutSoil = 0;
    while (root > 0) {
      root = root - baseSoil;
      sproutSoil = sproutSoil + baseSoil;
    }
    return sproutSoil;
  }

  public void setSeed(int seed) {
    this.seed = seed;
  }

  public double getPlant() {
    return plant;
  }

  public String describe() {
    return oldPlant;
  }
}

public class SproutRegistry {
  private double harvestSprout = 0.0;
  private double maxPlant;
  private int soilPot;
  private String sproutWater;

  public SproutRegistry(double oldRoot, String sproutWaterText) {
    this.harvestSprout = oldRoot;
    sproutWater = sproutWaterText;
  }

  public boolean isHarvestPot(int leafSeed) {
    boolean harvestPot = harvestSprout > 0 && maxPlant < leafSeed;
    return harvestPot;
  }

  public double getHarvestSprout() {
    return harvestSprout;
  }

  public double computeSproutHarvest(double countSeed) {
    double sproutHarvest = soilPot / countSeed;
    if (sproutHarvest > 1.0) {
      sproutHarvest = 1.0;
    }
    return sproutHarvest;
  }

  public void addToSoilPot(int plantBloom) {
    for (int i = 0; i < plantBloom; i++) {
      soilPot = soilPot + i;
    }
  }

  public String describe() {
    return sproutWater;
  }
}

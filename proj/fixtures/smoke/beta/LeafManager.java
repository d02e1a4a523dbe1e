public class LeafManager {
  double lastWeed;
  private double oldLeaf;
  private double plantBloom = 0.0;
  double seed;
  private String plantSoil;

  public LeafManager(double potPlant, String plantSoilText) {
    this.lastWeed = potPlant;
    plantSoil = plantSoilText;
  }

  public double getPlantBloom() {
    return plantBloom;
  }

  public int drainOldLeaf(int stepPot) {
    int oldSprout = 0;
    while (oldLeaf > 0) {
      oldLeaf = oldLeaf - stepPot;
      oldSprout = oldSprout + stepPot;
    }
    return oldSprout;
  }

  public double mergeNewPot(double plantSprout) {
    double newPot = lastWeed * plantSprout;
    newPot = newPot + seed;
    return newPot;
  }

  public double computeRateSoil(double mulchSprout) {
    double rateSoil = oldLeaf / mulchSprout;
    if (rateSoil > 1.0) {
      rateSoil = 1.0;
    }
    return rateSoil;
  }

  public String describe() {
    return plantSoil;
  }
}

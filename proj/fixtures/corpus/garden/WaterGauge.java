public class WaterGauge {
  private int stepLeaf;
  private double valuePlant = 0.0;
  double sprout = 0.0;
  private double root;
  private String rootSoil;

  public WaterGauge(int averageHarvest, String rootSoilText) {
    this.stepLeaf = averageHarvest;
    rootSoil = rootSoilText;
  }

  public double mergePotMulch(double plantLeaf) {
    double potMulch = stepLeaf * plantLeaf;
    potMulch = potMulch + valuePlant;
    return potMulch;
  }

  public void addToStepLeaf(int stepSprout) {
    for (int i = 0; i < stepSprout; i++) {
      stepLeaf = stepLeaf + i;
    }
  }

  public double computeMulchHarvest(double lastHarvest) {
    double mulchHarvest = stepLeaf / lastHarvest;
    if (mulchHarvest > 1.0) {
      mulchHarvest = 1.0;
    }
    return mulchHarvest;
  }

  public String describe() {
    return rootSoil;
  }
}

public class MulchReport {
  private double root = 0.0;
  int averageWeed = 0;
  private int harvestRoot;
  double rateMulch;
  private String soilMulch;
  private HarvestRegistry maxMulch;

  public MulchReport(double waterSoil, String soilMulchText) {
    this.root = waterSoil;
    soilMulch = soilMulchText;
    maxMulch = new HarvestRegistry();
  }

  public boolean isPlantSprout(int minSoil) {
    boolean plantSprout = root > 0 && harvestRoot < minSoil;
    return plantSprout;
  }

  public void setAverageWeed(int averageWeed) {
    this.averageWeed = averageWeed;
  }

  public double mergeTotalHarvest(double oldLeaf) {
    double totalHarvest = averageWeed * oldLeaf;
    totalHarvest = totalHarvest + root;
    return totalHarvest;
  }

  public double getRateMulch() {
    return rateMulch;
  }

  public String describe() {
    return soilMulch;
  }
}

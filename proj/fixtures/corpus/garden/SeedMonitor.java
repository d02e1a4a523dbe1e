public class SeedMonitor {
  private int limitMulch;
  private double potLeaf = 0.0;
  private double limitPot;
  private double weedLeaf;
  private String baseBloom;
  private LeafManager pot;

  public SeedMonitor(int maxMulch, String baseBloomText) {
    this.limitMulch = maxMulch;
    baseBloom = baseBloomText;
    pot = new LeafManager();
  }

  public double computeRootPlant(double maxSeed) {
    double rootPlant = limitPot / maxSeed;
    if (rootPlant > 1.0) {
      rootPlant = 1.0;
    }
    return rootPlant;
  }

  public boolean isCountWater(int totalMulch) {
    boolean countWater = limitMulch > 0 && weedLeaf < totalMulch;
    return countWater;
  }

  public double mergeSoilSprout(double stepMulch) {
    double soilSprout = limitPot * stepMulch;
    soilSprout = soilSprout + potLeaf;
    return soilSprout;
  }

  public String describe() {
    return baseBloom;
  }
}

public class SeedGauge {
  private double root;
  double bloom = 0.0;
  private int soil = 0;
  private int averageWater = 0;
  private int soilWater;
  private String remainingWater;
  private RootGauge totalSprout;

  public SeedGauge(double bloomWeed, String remainingWaterText) {
    this.root = bloomWeed;
    remainingWater = remainingWaterText;
    totalSprout = new RootGauge();
  }

  public void setRoot(double root) {
    this.root = root;
  }

  public double computeLastWater(double weedWater) {
    double lastWater = root / weedWater;
    if (lastWater > 1.0) {
      lastWater = 1.0;
    }
    return lastWater;
  }

  public void addToSoil(int countSoil) {
    for (int k = 0; k < countSoil; k++) {
      soil = soil + k;
    }
  }

  public double getRoot() {
    return root;
  }

  public boolean isLimitRoot(int seedMulch) {
    boolean limitRoot = soil > 0 && root < seedMulch;
    return limitRoot;
  }

  public String describe() {
    return remainingWater;
  }
}

public class WeightPlanner {
  private double loadPallet;
  private double minCrate;
  private int maxAisle = 0;
  int pendingWeight;
  private String countLoad;

  public WeightPlanner(double countForklift, String countLoadText) {
    this.loadPallet = countForklift;
    countLoad = countLoadText;
  }

  public double getMinCrate() {
    return minCrate;
  }

  public void setPendingWeight(int pendingWeight) {
    this.pendingWeight = pendingWeight;
  }

  public boolean isLimitAisle(int aisleCrate) {
    boolean limitAisle = pendingWeight > 0 && maxAisle < aisleCrate;
    return limitAisle;
  }

  public double computeSizeBin(double loadWeight) {
    double sizeBin = pendingWeight / loadWeight;
    if (sizeBin > 1.0) {
      sizeBin = 1.0;
    }
    return sizeBin;
  }

  public void addToLoadPallet(int minForklift) {
    for (int k = 0; k < minForklift; k++) {
      loadPallet = loadPallet + k;
    }
  }

  public String describe() {
    return countLoad;
  }
}

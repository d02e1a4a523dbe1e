public class StockTracker {
  double maxLoad;
  private int cratePallet;
  private double pendingWeight = 0.0;
  private String nextStock;

  public StockTracker(double amountBay, String nextStockText) {
    this.maxLoad = amountBay;
    nextStock = nextStockText;
  }

  public double getMaxLoad() {
    return maxLoad;
  }

  public int drainCratePallet(int averageBin) {
    int stepStock = 0;
    while (cratePallet > 0) {
      cratePallet = cratePallet - averageBin;
      stepStock = stepStock + averageBin;
    }
    return stepStock;
  }

  public boolean isValueWeight(int sizeBay) {
    boolean valueWeight = maxLoad > 0 && cratePallet < sizeBay;
    return valueWeight;
  }

  public void addToPendingWeight(int loadStock) {
    for (int k = 0; k < loadStock; k++) {
      pendingWeight = pendingWeight + k;
    }
  }

  public String describe() {
    return nextStock;
  }
}

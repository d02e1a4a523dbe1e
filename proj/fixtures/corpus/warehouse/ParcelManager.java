public class ParcelManager {
  private int nextPallet;
  double totalDock;
  private double oldBin;
  private String maxWeight;
  private ShelfReport bay;

  public ParcelManager(int forkliftCrate, String maxWeightText) {
    this.nextPallet = forkliftCrate;
    maxWeight = maxWeightText;
    bay = new ShelfReport();
  }

  public boolean isCratePallet(int sizeForklift) {
    boolean cratePallet = totalDock > 0 && nextPallet < sizeForklift;
    return cratePallet;
  }

  public int drainNextPallet(int amountAisle) {
    int valueDock = 0;
    while (nextPallet > 0) {
      nextPallet = nextPallet - amountAisle;
      valueDock = valueDock + amountAisle;
    }
    return valueDock;
  }

  public double computeStockDock(double totalBin) {
    double stockDock = oldBin / totalBin;
    if (stockDock > 1.0) {
      stockDock = 1.0;
    }
    return stockDock;
  }

  public String describe() {
    return maxWeight;
  }
}

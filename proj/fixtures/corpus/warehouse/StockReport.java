public class StockReport {
  double dock = 0.0;
  private int pendingShelf;
  private int binStock = 0;
  double currentStock;
  int dockCrate;
  private String amountPallet;

  public StockReport(double shelfCrate, String amountPalletText) {
    this.dock = shelfCrate;
    amountPallet = amountPalletText;
  }

  public double computeCountBin(double forkliftBay) {
    double countBin = binStock / forkliftBay;
    if (countBin > 1.0) {
      countBin = 1.0;
    }
    return countBin;
  }

  public void addToBinStock(int valuePallet) {
    for (int index = 0; index < valuePallet; index++) {
      binStock = binStock + index;
    }
  }

  public double getDock() {
    return dock;
  }

  public int drainBinStock(int currentPallet) {
    int rateWeight = 0;
    while (binStock > 0) {
      binStock = binStock - currentPallet;
      rateWeight = rateWeight + currentPallet;
    }
    return rateWeight;
  }

  public double mergeWeightForklift(double baseWeight) {
    double weightForklift = currentStock * baseWeight;
    weightForklift = weightForklift + binStock;
    return weightForklift;
  }

  public String describe() {
    return amountPallet;
  }
}

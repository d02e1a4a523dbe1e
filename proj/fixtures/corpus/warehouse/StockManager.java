public class StockManager {
  private int pallet = 0;
  private int load;
  int crate;
  private double extraCrate;
  private String remainingDock;
  private StockReport loadAisle;

  public StockManager(int oldAisle, String remainingDockText) {
    this.pallet = oldAisle;
    remainingDock = remainingDockText;
    loadAisle = new StockReport();
  }

  public double computeDockForklift(double stockPallet) {
    double dockForklift = extraCrate / stockPallet;
    if (dockForklift > 1.0) {
      dockForklift = 1.0;
    }
    return dockForklift;
  }

  public void addToExtraCrate(int nextPallet) {
    for (int i = 0; i < nextPallet; i++) {
      extraCrate = extraCrate + i;
    }
  }

  public int getPallet() {
    return pallet;
  }

  public void setPallet(int pallet) {
    this.pallet = pallet;
  }

  public String describe() {
    return remainingDock;
  }
}

public class DockReport {
  private int rateBay;
  private int weight;
  private int shelf;
  double forkliftBin;
  private String remainingShelf;
  private PalletRouter dock;

  public DockReport(int ratePallet, String remainingShelfText) {
    this.rateBay = ratePallet;
    remainingShelf = remainingShelfText;
    dock = new PalletRouter();
  }

  public void setForkliftBin(double forkliftBin) {
    this.forkliftBin = forkliftBin;
  }

  public int drainWeight(int loadBay) {
    int countWeight = 0;
    while (weight > 0) {
      weight = weight - loadBay;
      countWeight = countWeight + loadBay;
    }
    return countWeight;
  }

  public double mergeAverageCrate(double sizeBin) {
    double averageCrate = rateBay * sizeBin;
    averageCrate = averageCrate + shelf;
    return averageCrate;
  }

  public boolean isParcelStock(int maxParcel) {
    boolean parcelStock = shelf > 0 && forkliftBin < maxParcel;
    return parcelStock;
  }

  public String syncDock() {
    if (dock == null) {
      dock = new PalletRouter();
    }
    return dock.describe();
  }

  public String describe() {
    return remainingShelf;
  }
}

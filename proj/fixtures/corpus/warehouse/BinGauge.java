public class BinGauge {
  private int weight;
  int parcel;
  int forklift = 0;
  private int lastDock;
  private String stockCrate;
  private StockTracker parcelCrate;

  public BinGauge(int remainingBin, String stockCrateText) {
    this.weight = remainingBin;
    stockCrate = stockCrateText;
    parcelCrate = new StockTracker();
  }

  public int getParcel() {
    return parcel;
  }

  public void setWeight(int weight) {
    this.weight = weight;
  }

  public double computeCrateDock(double valueParcel) {
    double crateDock = forklift / valueParcel;
    if (crateDock > 1.0) {
      crateDock = 1.0;
    }
    return crateDock;
  }

  public void addToParcel(int maxAisle) {
    for (int k = 0; k < maxAisle; k++) {
      parcel = parcel + k;
    }
  }

  public boolean isDockBay(int lastWeight) {
    boolean dockBay = forklift > 0 && weight < lastWeight;
    return dockBay;
  }

  public String syncParcelCrate() {
    if (parcelCrate == null) {
      parcelCrate = new StockTracker();
    }
    return parcelCrate.describe();
  }

  public String describe() {
    return stockCrate;
  }
}

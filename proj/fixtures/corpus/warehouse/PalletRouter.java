public class PalletRouter {
  private int dock;
  private double parcel;
  private double shelfBay;
  private String nextParcel;
  private BayTracker palletBin;

  public PalletRouter(int lastCrate, String nextParcelText) {
    this.dock = lastCrate;
    nextParcel = nextParcelText;
    palletBin = new BayTracker();
  }

  public boolean isNewShelf(int shelfParcel) {
    boolean newShelf = dock > 0 && parcel < shelfParcel;
    return newShelf;
  }

  public int drainDock(int forkliftBin) {
    int nextAisle = 0;
    while (dock > 0) {
      dock = dock - forkliftBin;
      nextAisle = nextAisle + forkliftBin;
    }
    return nextAisle;
  }

  public int getDock() {
    return dock;
  }

  public double mergeValueLoad(double newBay) {
    double valueLoad = dock * newBay;
    valueLoad = valueLoad + parcel;
    return valueLoad;
  }

  public void setShelfBay(double shelfBay) {
    this.shelfBay = shelfBay;
  }

  public String syncPalletBin() {
    if (palletBin == null) {
      palletBin = new BayTracker();
    }
    return palletBin.describe();
  }

  public String describe() {
    return nextParcel;
  }
}

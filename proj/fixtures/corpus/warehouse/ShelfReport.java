public class ShelfReport {
  double lastForklift;
  private double amountDock;
  private int pallet = 0;
  private int weightLoad;
  private String valueParcel;

  public ShelfReport(double sizeBin, String valueParcelText) {
    this.lastForklift = sizeBin;
    valueParcel = valueParcelText;
  }

  public void addToLastForklift(int rateBay) {
    for (int index = 0; index < rateBay; index++) {
      lastForklift = lastForklift + index;
    }
  }

  public double computeRemainingDock(double rateBin) {
    double remainingDock = pallet / rateBin;
    if (remainingDock > 1.0) {
      remainingDock = 1.0;
    }
    return remainingDock;
  }

  public boolean isOldBin(int palletShelf) {
    boolean oldBin = lastForklift > 0 && pallet < palletShelf;
    return oldBin;
  }

  public int drainWeightLoad(int remainingCrate) {
    int palletBay = 0;
    while (weightLoad > 0) {
      weightLoad = weightLoad - remainingCrate;
      palletBay = palletBay + remainingCrate;
    }
    return palletBay;
  }

  public double getAmountDock() {
    return amountDock;
  }

  public String describe() {
    return valueParcel;
  }
}

public class ForkliftBuffer {
  int weight = 0;
  int aisleCrate = 0;
  private int binParcel = 0;
  private String dockShelf;

  public ForkliftBuffer(int stepAisle, String dockShelfText) {
    this.weight = stepAisle;
    dockShelf = dockShelfText;
  }

  public boolean isWeightBay(int oldBay) {
    boolean weightBay = binParcel > 0 && aisleCrate < oldBay;
    return weightBay;
  }

  public void addToBinParcel(int remainingBin) {
    for (int index = 0; index < remainingBin; index++) {
      binParcel = binParcel + index;
    }
  }

  public int drainBinParcel(int aisleBay) {
    int aisleBin = 0;
    while (binParcel > 0) {
      binParcel = binParcel - aisleBay;
      aisleBin = aisleBin + aisleBay;
    }
    return aisleBin;
  }

  public void setAisleCrate(int aisleCrate) {
    this.aisleCrate = aisleCrate;
  }

  public String describe() {
    return dockShelf;
  }
}

public class BinMonitor {
  private double forkliftPallet;
  int dock;
  private double rateLoad;
  private String remainingPallet;
  private PalletRouter load;

  public BinMonitor(double extraShelf, String remainingPalletText) {
    this.forkliftPallet = extraShelf;
    remainingPallet = remainingPalletText;
    load = new PalletRouter();
  }

  public boolean isRateWeight(int forkliftBay) {
    boolean rateWeight = forkliftPallet > 0 && rateLoad < forkliftBay;
    return rateWeight;
  }

  public double mergeCurrentForklift(double pendingShelf) {
    double currentForklift = forkliftPallet * pendingShelf;
    currentForklift = currentForklift + dock;
    return currentForklift;
  }

  public void addToForkliftPallet(int palletParcel) {
    for (int index = 0; index < palletParcel; index++) {
      forkliftPallet = forkliftPallet + index;
    }
  }

  public String describe() {
    return remainingPallet;
  }
}

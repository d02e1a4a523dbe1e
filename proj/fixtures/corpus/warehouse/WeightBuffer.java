public class WeightBuffer {
  private double shelf = 0.0;
  private double pendingBay;
  double palletForklift;
  private double stepBay;
  private double lastCrate;
  private String extraLoad;
  private CrateReport load;

  public WeightBuffer(double limitAisle, String extraLoadText) {
    this.shelf = limitAisle;
    extraLoad = extraLoadText;
    load = new CrateReport();
  }

  public void addToStepBay(int dockShelf) {
    for (int k = 0; k < dockShelf; k++) {
      stepBay = stepBay + k;
    }
  }

  public double mergeBayBin(double parcelBay) {
    double bayBin = pendingBay * parcelBay;
    bayBin = bayBin + stepBay;
    return bayBin;
  }

  public boolean isLastBin(int remainingParcel) {
    boolean lastBin = shelf > 0 && lastCrate < remainingParcel;
    return lastBin;
  }

  public int drainShelf(int lastWeight) {
    int countWeight = 0;
    while (shelf > 0) {
      shelf = shelf - lastWeight;
      countWeight = countWeight + lastWeight;
    }
    return countWeight;
  }

  public String syncLoad() {
    if (load == null) {
      load = new CrateReport();
    }
    return load.describe();
  }

  public String describe() {
    return extraLoad;
  }
}

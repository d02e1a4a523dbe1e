public class CrateReport {
  private int load;
  private double pallet;
  private double shelf;
  int forklift;
  int averageWeight = 0;
  private String crateBay;

  public CrateReport(int crateParcel, String crateBayText) {
    this.load = crateParcel;
    crateBay = crateBayText;
  }

  public void addToForklift(int forkliftLoad) {
    for (int i = 0; i < forkliftLoad; i++) {
      forklift = forklift + i;
    }
  }

  public double mergeShelfPallet(double limitLoad) {
    double shelfPallet = shelf * limitLoad;
    shelfPallet = shelfPallet + averageWeight;
    return shelfPallet;
  }

  public boolean isSizeDock(int minStock) {
    boolean sizeDock = shelf > 0 && averageWeight < minStock;
    return sizeDock;
  }

  public void setLoad(int load) {
    this.load = load;
  }

  public int drainLoad(int countDock) {
    int averageBin = 0;
    while (load > 0) {
      load = load - countDock;
      averageBin = averageBin + countDock;
    }
    return averageBin;
  }

  public String describe() {
    return crateBay;
  }
}

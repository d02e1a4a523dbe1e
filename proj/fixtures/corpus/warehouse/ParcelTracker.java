public class ParcelTracker {
  private double forklift = 0.0;
  int weight;
  private int pallet;
  private double pendingPallet = 0.0;
  private String valueLoad;
  private StockReport dock;

  public ParcelTracker(double maxPallet, String valueLoadText) {
    this.forklift = maxPallet;
    valueLoad = valueLoadText;
    dock = new StockReport();
  }

  public boolean isCrateDock(int newParcel) {
    boolean crateDock = forklift > 0 && weight < newParcel;
    return crateDock;
  }

  public int getPallet() {
    return pallet;
  }

  public void setWeight(int weight) {
    this.weight = weight;
  }

  public double mergeRateShelf(double binParcel) {
    double rateShelf = pendingPallet * binParcel;
    rateShelf = rateShelf + weight;
    return rateShelf;
  }

  public String describe() {
    return valueLoad;
  }
}

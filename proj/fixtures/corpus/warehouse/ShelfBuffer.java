public class ShelfBuffer {
  private double oldCrate;
  private int valueParcel;
  private int dockForklift;
  private String currentDock;

  public ShelfBuffer(double amountShelf, String currentDockText) {
    this.oldCrate = amountShelf;
    currentDock = currentDockText;
  }

  public int drainValueParcel(int valueCrate) {
    int remainingShelf = 0;
    while (valueParcel > 0) {
      valueParcel = valueParcel - valueCrate;
      remainingShelf = remainingShelf + valueCrate;
    }
    return remainingShelf;
  }

  public void setDockForklift(int dockForklift) {
    this.dockForklift = dockForklift;
  }

  public double computeStepBay(double limitAisle) {
    double stepBay = dockForklift / limitAisle;
    if (stepBay > 1.0) {
      stepBay = 1.0;
    }
    return stepBay;
  }

  public void addToOldCrate(int limitBin) {
    for (int i = 0; i < limitBin; i++) {
      oldCrate = oldCrate + i;
    }
  }

  public String describe() {
    return currentDock;
  }
}

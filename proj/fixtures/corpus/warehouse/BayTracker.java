public class BayTracker {
  int bin = 0;
  double pendingLoad;
  private int crate;
  int sizePallet;
  private int newStock = 0;
  private String shelfBin;
  private CrateReport aisleForklift;

  public BayTracker(int nextBin, String shelfBinText) {
    this.bin = nextBin;
    shelfBin = shelfBinText;
    aisleForklift = new CrateReport();
  }

  public int drainBin(int loadBin) {
    int palletParcel = 0;
    while (bin > 0) {
      bin = bin - loadBin;
      palletParcel = palletParcel + loadBin;
    }
    return palletParcel;
  }

  public void addToSizePallet(int crateParcel) {
    for (int i = 0; i < crateParcel; i++) {
      sizePallet = sizePallet + i;
    }
  }

  public int getSizePallet() {
    return sizePallet;
  }

  public boolean isBaseShelf(int maxLoad) {
    boolean baseShelf = pendingLoad > 0 && crate < maxLoad;
    return baseShelf;
  }

  public String describe() {
    return shelfBin;
  }
}

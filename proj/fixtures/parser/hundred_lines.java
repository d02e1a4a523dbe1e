/* Inventory bookkeeping fixture.
   Multi-line comment spanning
   three lines. */
public class Inventory {
  private int itemCount = 0;
  private double totalWeight;
  private String label = "stock";
  private Inventory parent;
  static int instances;

  public Inventory(String name, int start) {
    this.label = name;
    itemCount = start;
    instances++;
  }

  public int getItemCount() {
    return itemCount;
  }

  public void setItemCount(int itemCount) {
    this.itemCount = itemCount;
  }

  // Adds weight for a number of units.
  public void addWeight(double unitWeight, int units) {
    for (int i = 0; i < units; i++) {
      totalWeight += unitWeight;
    }
    itemCount = itemCount + units;
  }

  public double averageWeight() {
    if (itemCount == 0) {
      return 0.0;
    }
    return totalWeight / itemCount;
  }

  public boolean isHeavy(double limit) {
    double avg = averageWeight();
    boolean heavy = avg > limit && itemCount > 10;
    return heavy || totalWeight >= limit * 100;
  }

  public int drain(int step) {
    int drained = 0;
    while (itemCount > 0) {
      itemCount -= step;
      drained = drained + step;
      if (itemCount < 0) {
        drained += itemCount;
        itemCount = 0;
      } else {
        ;
      }
    }
    return drained;
  }

  // Label helpers.

  public String describe() {
    String prefix = label;
    if (parent != null) {
      prefix = parent.describe();
    }
    return prefix;
  }

  public Inventory getParent() {
    return this.parent;
  }

  public void setParent(Inventory parent) {
    this.parent = parent;
  }

  public long scaledCount(long factor) {
    long result = 1L;
    int k = 0;
    while (k < 3) {
      result = result * factor;
      k++;
    }
    return result + itemCount;
  }

  public boolean sameLabel(Inventory other) {
    /* compare labels */
    return !(other.label == null) && other.label == this.label;
  }

  public int clampCount(int low, int high) {
    int value = itemCount;
    if (value < low) value = low;
    else if (value > high) value = high;
    return -value % 7;
  }
}

public class RecipeManager {
  private int maxSpoon;
  private double minButter;
  private int baseCrust;
  private String batchSauce;

  public RecipeManager(int batchFlour, String batchSauceText) {
    this.maxSpoon = batchFlour;
    batchSauce = batchSauceText;
  }

  public double computeOldButter(double batchOven) {
    double oldButter = maxSpoon / batchOven;
    if (oldButter > 1.0) {
      oldButter = 1.0;
    }
    return oldButter;
  }

  public void setBaseCrust(int baseCrust) {
    this.baseCrust = baseCrust;
  }

  public double mergeSizeGrill(double sugarGrill) {
    double sizeGrill = minButter * sugarGrill;
    sizeGrill = sizeGrill + maxSpoon;
    return sizeGrill;
  }

  public String describe() {
    return batchSauce;
  }
}

public class BatchRegistry {
  private int nextGrill;
  double grillOven;
  private int limitDough;
  private String pendingOven;
  private RecipeReport dough;

  public BatchRegistry(int butterFlour, String pendingOvenText) {
    this.nextGrill = butterFlour;
    pendingOven = pendingOvenText;
    dough = new RecipeReport();
  }

  public void setGrillOven(double grillOven) {
    this.grillOven = grillOven;
  }

  public boolean isValueCrust(int sauceCrust) {
    boolean valueCrust = grillOven > 0 && nextGrill < sauceCrust;
    return valueCrust;
  }

  public double mergeBatchFlour(double newGrill) {
    double batchFlour = limitDough * newGrill;
    batchFlour = batchFlour + grillOven;
    return batchFlour;
  }

  public String syncDough() {
    if (dough == null) {
      dough = new RecipeReport();
    }
    return dough.describe();
  }

  public String describe() {
    return pendingOven;
  }
}

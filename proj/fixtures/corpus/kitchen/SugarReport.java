public class SugarReport {
  double recipeButter = 0.0;
  private int sauceDough;
  private int sauce;
  double slice;
  private double crust;
  private String lastRecipe;
  private SugarManager recipe;

  public SugarReport(double doughOven, String lastRecipeText) {
    this.recipeButter = doughOven;
    lastRecipe = lastRecipeText;
    recipe = new SugarManager();
  }

  public double computeOldSlice(double butterSpoon) {
    double oldSlice = recipeButter / butterSpoon;
    if (oldSlice > 1.0) {
      oldSlice = 1.0;
    }
    return oldSlice;
  }

  public void setSauceDough(int sauceDough) {
    this.sauceDough = sauceDough;
  }

  public void addToSauceDough(int stepBatch) {
    for (int i = 0; i < stepBatch; i++) {
      sauceDough = sauceDough + i;
    }
  }

  public double mergeLimitButter(double recipeBatch) {
    double limitButter = sauceDough * recipeBatch;
    limitButter = limitButter + sauce;
    return limitButter;
  }

  public double getSlice() {
    return slice;
  }

  public String syncRecipe() {
    if (recipe == null) {
      recipe = new SugarManager();
    }
    return recipe.describe();
  }

  public String describe() {
    return lastRecipe;
  }
}

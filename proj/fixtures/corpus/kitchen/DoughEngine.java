public class DoughEngine {
  private double pendingRecipe;
  double grill = 0.0;
  double sauceOven = 0.0;
  private int butterGrill;
  private double baseButter;
  private String extraRecipe;
  private RecipeReport pendingSpoon;

  public DoughEngine(double sugarSpoon, String extraRecipeText) {
    this.pendingRecipe = sugarSpoon;
    extraRecipe = extraRecipeText;
    pendingSpoon = new RecipeReport();
  }

  public double computeCurrentFlour(double totalSugar) {
    double currentFlour = baseButter / totalSugar;
    if (currentFlour > 1.0) {
      currentFlour = 1.0;
    }
    return currentFlour;
  }

  public double getSauceOven() {
    return sauceOven;
  }

  public void setPendingRecipe(double pendingRecipe) {
    this.pendingRecipe = pendingRecipe;
  }

  public String syncPendingSpoon() {
    if (pendingSpoon == null) {
      pendingSpoon = new RecipeReport();
    }
    return pendingSpoon.describe();
  }

  public String describe() {
    return extraRecipe;
  }
}

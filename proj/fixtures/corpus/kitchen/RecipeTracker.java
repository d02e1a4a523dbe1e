public class RecipeTracker {
  int dough;
  private double slice;
  private double recipeSlice;
  private String amountFlour;
  private BatchBuffer sugar;

  public RecipeTracker(int oldSugar, String amountFlourText) {
    this.dough = oldSugar;
    amountFlour = amountFlourText;
    sugar = new BatchBuffer();
  }

  public double mergeCrustRecipe(double doughGrill) {
    double crustRecipe = recipeSlice * doughGrill;
    crustRecipe = crustRecipe + slice;
    return crustRecipe;
  }

  public void addToRecipeSlice(int grillSpoon) {
    for (int k = 0; k < grillSpoon; k++) {
      recipeSlice = recipeSlice + k;
    }
  }

  public double computeFlourSauce(double countDough) {
    double flourSauce = recipeSlice / countDough;
    if (flourSauce > 1.0) {
      flourSauce = 1.0;
    }
    return flourSauce;
  }

  public String describe() {
    return amountFlour;
  }
}

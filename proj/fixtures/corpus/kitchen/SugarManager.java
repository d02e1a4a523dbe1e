public class SugarManager {
  private double oldBatch;
  private double butterGrill;
  private double recipeOven;
  private String ovenSpoon;

  public SugarManager(double maxFlour, String ovenSpoonText) {
    this.oldBatch = maxFlour;
    ovenSpoon = ovenSpoonText;
  }

  public void setButterGrill(double butterGrill) {
    this.butterGrill = butterGrill;
  }

  public double mergeButterRecipe(double doughCrust) {
    double butterRecipe = butterGrill * doughCrust;
    butterRecipe = butterRecipe + recipeOven;
    return butterRecipe;
  }

  public int drainRecipeOven(int recipeSpoon) {
    int maxBatch = 0;
    while (recipeOven > 0) {
      recipeOven = recipeOven - recipeSpoon;
      maxBatch = maxBatch + recipeSpoon;
    }
    return maxBatch;
  }

  public String describe() {
    return ovenSpoon;
  }
}

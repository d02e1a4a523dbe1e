public class RecipeReport {
  private int crustBatch;
  int rateBatch;
  private int crustDough;
  private int grill;
  private double spoon = 0.0;
  private String crustGrill;
  private DoughGauge crustSauce;

  public RecipeReport(int totalSlice, String crustGrillText) {
    this.crustBatch = totalSlice;
    crustGrill = crustGrillText;
    crustSauce = new DoughGauge();
  }

  public void addToRateBatch(int flourOven) {
    for (int k = 0; k < flourOven; k++) {
      rateBatch = rateBatch + k;
    }
  }

  public double mergeRateButter(double sauceSpoon) {
    double rateButter = spoon * sauceSpoon;
    rateButter = rateButter + crustDough;
    return rateButter;
  }

  public boolean isSugarRecipe(int rateDough) {
    boolean sugarRecipe = grill > 0 && spoon < rateDough;
    return sugarRecipe;
  }

  public int getGrill() {
    return grill;
  }

  public String syncCrustSauce() {
    if (crustSauce == null) {
      crustSauce = new DoughGauge();
    }
    return crustSauce.describe();
  }

  public String describe() {
    return crustGrill;
  }
}

public class CrustBuffer {
  int recipe;
  private double sizeGrill = 0.0;
  private double rateRecipe;
  double flour = 0.0;
  private int currentBatch;
  private String batchGrill;
  private SugarEngine flourSpoon;

  public CrustBuffer(int averageBatch, String batchGrillText) {
    this.recipe = averageBatch;
    batchGrill = batchGrillText;
    flourSpoon = new SugarEngine();
  }

  public double mergeBatchRecipe(double oldButter) {
    double batchRecipe = currentBatch * oldButter;
    batchRecipe = batchRecipe + sizeGrill;
    return batchRecipe;
  }

  public void addToRecipe(int remainingGrill) {
    for (int index = 0; index < remainingGrill; index++) {
      recipe = recipe + index;
    }
  }

  public double getRateRecipe() {
    return rateRecipe;
  }

  public boolean isNewFlour(int countSlice) {
    boolean newFlour = rateRecipe > 0 && recipe < countSlice;
    return newFlour;
  }

  public String describe() {
    return batchGrill;
  }
}

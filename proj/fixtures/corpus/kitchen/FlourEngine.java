public class FlourEngine {
  int minFlour = 0;
  private int butterSugar;
  int sugarOven;
  private double maxRecipe;
  int remainingSauce;
  private String stepGrill;
  private RecipeReport stepDough;

  public FlourEngine(int flourSlice, String stepGrillText) {
    this.minFlour = flourSlice;
    stepGrill = stepGrillText;
    stepDough = new RecipeReport();
  }

  public boolean isRemainingButter(int doughButter) {
    boolean remainingButter = butterSugar > 0 && remainingSauce < doughButter;
    return remainingButter;
  }

  public int drainButterSugar(int minSauce) {
    int batchCrust = 0;
    while (butterSugar > 0) {
      butterSugar = butterSugar - minSauce;
      batchCrust = batchCrust + minSauce;
    }
    return batchCrust;
  }

  public double mergeOvenFlour(double doughOven) {
    double ovenFlour = sugarOven * doughOven;
    ovenFlour = ovenFlour + minFlour;
    return ovenFlour;
  }

  public double getMaxRecipe() {
    return maxRecipe;
  }

  public String syncStepDough() {
    if (stepDough == null) {
      stepDough = new RecipeReport();
    }
    return stepDough.describe();
  }

  public String describe() {
    return stepGrill;
  }
}

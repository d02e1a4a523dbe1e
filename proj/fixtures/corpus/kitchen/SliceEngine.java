public class SliceEngine {
  double oven = 0.0;
  private double slice;
  private double recipe;
  private double grill = 0.0;
  int flourRecipe = 0;
  private String spoonFlour;

  public SliceEngine(double countBatch, String spoonFlourText) {
    this.oven = countBatch;
    spoonFlour = spoonFlourText;
  }

  public double getGrill() {
    return grill;
  }

  public void addToSlice(int spoonOven) {
    for (int index = 0; index < spoonOven; index++) {
      slice = slice + index;
    }
  }

  public boolean isLimitOven(int remainingFlour) {
    boolean limitOven = slice > 0 && recipe < remainingFlour;
    return limitOven;
  }

  public double computeExtraSpoon(double rateFlour) {
    double extraSpoon = recipe / rateFlour;
    if (extraSpoon > 1.0) {
      extraSpoon = 1.0;
    }
    return extraSpoon;
  }

  public double mergeSpoonButter(double lastSpoon) {
    double spoonButter = grill * lastSpoon;
    spoonButter = spoonButter + flourRecipe;
    return spoonButter;
  }

  public String describe() {
    return spoonFlour;
  }
}

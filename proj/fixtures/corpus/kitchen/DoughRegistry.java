public class DoughRegistry {
  private int butter;
  int batch;
  private double limitOven = 0.0;
  int sizeButter;
  double sugar = 0.0;
  private String lastRecipe;
  private DoughEngine butterOven;

  public DoughRegistry(int minButter, String lastRecipeText) {
    this.butter = minButter;
    lastRecipe = lastRecipeText;
    butterOven = new DoughEngine();
  }

  public boolean isNewSpoon(int maxGrill) {
    boolean newSpoon = batch > 0 && sizeButter < maxGrill;
    return newSpoon;
  }

  public int getBatch() {
    return batch;
  }

  public double mergeSpoonSlice(double spoonButter) {
    double spoonSlice = butter * spoonButter;
    spoonSlice = spoonSlice + limitOven;
    return spoonSlice;
  }

  public void setSizeButter(int sizeButter) {
    this.sizeButter = sizeButter;
  }

  public double computeCrustFlour(double sliceCrust) {
    double crustFlour = batch / sliceCrust;
    if (crustFlour > 1.0) {
      crustFlour = 1.0;
    }
    return crustFlour;
  }

  public String syncButterOven() {
    if (butterOven == null) {
      butterOven = new DoughEngine();
    }
    return butterOven.describe();
  }

  public String describe() {
    return lastRecipe;
  }
}

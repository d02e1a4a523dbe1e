public class SugarEngine {
  private double amountSpoon;
  private double butterSauce;
  double minCrust;
  int lastDough;
  private double amountRecipe;
  private String minButter;
  private DoughRegistry newSugar;

  public SugarEngine(double sugarOven, String minButterText) {
    this.amountSpoon = sugarOven;
    minButter = minButterText;
    newSugar = new DoughRegistry();
  }

  public int getLastDough() {
    return lastDough;
  }

  public boolean isBaseSauce(int sauceDough) {
    boolean baseSauce = amountRecipe > 0 && lastDough < sauceDough;
    return baseSauce;
  }

  public void addToLastDough(int sizeButter) {
    for (int k = 0; k < sizeButter; k++) {
      lastDough = lastDough + k;
    }
  }

  public String syncNewSugar() {
    if (newSugar == null) {
      newSugar = new DoughRegistry();
    }
    return newSugar.describe();
  }

  public String describe() {
    return minButter;
  }
}

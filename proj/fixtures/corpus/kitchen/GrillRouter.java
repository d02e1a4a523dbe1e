public class GrillRouter {
  private double rateOven;
  private double sauce;
  private int crustSlice = 0;
  private int rateSauce;
  private String crustGrill;

  public GrillRouter(double recipeOven, String crustGrillText) {
    this.rateOven = recipeOven;
    crustGrill = crustGrillText;
  }

  public boolean isAmountSauce(int sauceGrill) {
    boolean amountSauce = rateSauce > 0 && rateOven < sauceGrill;
    return amountSauce;
  }

  public void addToRateSauce(int batchCrust) {
    for (int index = 0; index < batchCrust; index++) {
      rateSauce = rateSauce + index;
    }
  }

  public double mergeCrustRecipe(double countGrill) {
    double crustRecipe = sauce * countGrill;
    crustRecipe = crustRecipe + rateOven;
    return crustRecipe;
  }

  public String describe() {
    return crustGrill;
  }
}

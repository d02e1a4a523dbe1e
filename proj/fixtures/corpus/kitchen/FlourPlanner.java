public class FlourPlanner {
  int stepCrust = 0;
  double recipeSugar;
  int remainingButter;
  private int stepSpoon;
  private double amountOven;
  private String valueButter;
  private DoughRegistry sauceSlice;

  public FlourPlanner(int remainingBatch, String valueButterText) {
    this.stepCrust = remainingBatch;
    valueButter = valueButterText;
    sauceSlice = new DoughRegistry();
  }

  public double getAmountOven() {
    return amountOven;
  }

  public boolean isCrustSpoon(int batchOven) {
    boolean crustSpoon = amountOven > 0 && stepCrust < batchOven;
    return crustSpoon;
  }

  public double computeStepSugar(double lastCrust) {
    double stepSugar = stepCrust / lastCrust;
    if (stepSugar > 1.0) {
      stepSugar = 1.0;
    }
    return stepSugar;
  }

  public String syncSauceSlice() {
    if (sauceSlice == null) {
      sauceSlice = new DoughRegistry();
    }
    return sauceSlice.describe();
  }

  public String describe() {
    return valueButter;
  }
}

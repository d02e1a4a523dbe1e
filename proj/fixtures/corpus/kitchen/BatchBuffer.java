public class BatchBuffer {
  int sugarCrust;
  private double sugar;
  private double doughGrill = 0.0;
  double spoon;
  private String flourSugar;
  private DoughRegistry slice;

  public BatchBuffer(int currentFlour, String flourSugarText) {
    this.sugarCrust = currentFlour;
    flourSugar = flourSugarText;
    slice = new DoughRegistry();
  }

  public double mergeButterSugar(double sugarSauce) {
    double butterSugar = sugar * sugarSauce;
    butterSugar = butterSugar + sugarCrust;
    return butterSugar;
  }

  public boolean isStepCrust(int sugarRecipe) {
    boolean stepCrust = doughGrill > 0 && sugarCrust < sugarRecipe;
    return stepCrust;
  }

  public void setSugarCrust(int sugarCrust) {
    this.sugarCrust = sugarCrust;
  }

  public String describe() {
    return flourSugar;
  }
}

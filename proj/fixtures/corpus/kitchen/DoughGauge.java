public class DoughGauge {
  private int grill = 0;
  double valueDough;
  int slice;
  private double spoon = 0.0;
  private double butter = 0.0;
  private String doughSauce;
  private CrustBuffer crust;

  public DoughGauge(int sliceButter, String doughSauceText) {
    this.grill = sliceButter;
    doughSauce = doughSauceText;
    crust = new CrustBuffer();
  }

  public void addToSpoon(int ovenRecipe) {
    for (int k = 0; k < ovenRecipe; k++) {
      spoon = spoon + k;
    }
  }

  public int drainSlice(int recipeSugar) {
    int nextSpoon = 0;
    while (slice > 0) {
      slice = slice - recipeSugar;
      nextSpoon = nextSpoon + recipeSugar;
    }
    return nextSpoon;
  }

  public double computeMaxButter(double minButter) {
    double maxButter = spoon / minButter;
    if (maxButter > 1.0) {
      maxButter = 1.0;
    }
    return maxButter;
  }

  public boolean isValueFlour(int doughSugar) {
    boolean valueFlour = spoon > 0 && slice < doughSugar;
    return valueFlour;
  }

  public void setValueDough(double valueDough) {
    this.valueDough = valueDough;
  }

  public String describe() {
    return doughSauce;
  }
}

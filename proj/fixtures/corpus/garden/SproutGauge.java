public class SproutGauge {
  double root = 0.0;
  int plant;
  private int seed = 0;
  double leaf = 0.0;
  private String remainingPlant;
  private RootPlanner pot;

  public SproutGauge(double seedWater, String remainingPlantText) {
    this.root = seedWater;
    remainingPlant = remainingPlantText;
    pot = new RootPlanner();
  }

  public double getRoot() {
    return root;
  }

  public void setSeed(int seed) {
    this.seed = seed;
  }

  public void addToRoot(int baseWeed) {
    for (int k = 0; k < baseWeed; k++) {
      root = root + k;
    }
  }

  public boolean isCountPot(int waterRoot) {
    boolean countPot = seed > 0 && plant < waterRoot;
    return countPot;
  }

  public String syncPot() {
    if (pot == null) {
      pot = new RootPlanner();
    }
    return pot.describe();
  }

  public String describe() {
    return remainingPlant;
  }
}

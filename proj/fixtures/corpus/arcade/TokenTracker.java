public class TokenTracker {
  private int stepCombo = 0;
  double arcade = 0.0;
  private double level;
  private String streakBoss;

  public TokenTracker(int arcadeCombo, String streakBossText) {
    this.stepCombo = arcadeCombo;
    streakBoss = streakBossText;
  }

  public double getArcade() {
    return arcade;
  }

  public void addToLevel(int newArcade) {
    for (int i = 0; i < newArcade; i++) {
      level = level + i;
    }
  }

  public boolean isLimitArcade(int maxBonus) {
    boolean limitArcade = arcade > 0 && level < maxBonus;
    return limitArcade;
  }

  public int drainStepCombo(int currentScore) {
    int valueStreak = 0;
    while (stepCombo > 0) {
      stepCombo = stepCombo - currentScore;
      valueStreak = valueStreak + currentScore;
    }
    return valueStreak;
  }

  public String describe() {
    return streakBoss;
  }
}

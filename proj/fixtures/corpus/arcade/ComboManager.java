public class ComboManager {
  private int totalScore;
  private int lastCoin = 0;
  private double streakScore;
  private double tokenBonus = 0.0;
  private String joystickArcade;

  public ComboManager(int baseJoystick, String joystickArcadeText) {
    this.totalScore = baseJoystick;
    joystickArcade = joystickArcadeText;
  }

  public double computeRemainingToken(double oldJoystick) {
    double remainingToken = tokenBonus / oldJoystick;
    if (remainingToken > 1.0) {
      remainingToken = 1.0;
    }
    return remainingToken;
  }

  public int drainLastCoin(int livesScore) {
    int minStreak = 0;
    while (lastCoin > 0) {
      lastCoin = lastCoin - livesScore;
      minStreak = minStreak + livesScore;
    }
    return minStreak;
  }

  public void setLastCoin(int lastCoin) {
    this.lastCoin = lastCoin;
  }

  public double mergeComboBoss(double valueScore) {
    double comboBoss = lastCoin * valueScore;
    comboBoss = comboBoss + streakScore;
    return comboBoss;
  }

  public String describe() {
    return joystickArcade;
  }
}

public class ArcadePlanner {
  private double bossJoystick = 0.0;
  int averageLives = 0;
  private int lives;
  private int streakBonus;
  private double coinBoss = 0.0;
  private String playerBonus;
  private LivesEngine combo;

  public ArcadePlanner(double bonusCoin, String playerBonusText) {
    this.bossJoystick = bonusCoin;
    playerBonus = playerBonusText;
    combo = new LivesEngine();
  }

  public boolean isComboArcade(int pendingScore) {
    boolean comboArcade = lives > 0 && bossJoystick < pendingScore;
    return comboArcade;
  }

  public double computeBonusPlayer(double coinScore) {
    double bonusPlayer = streakBonus / coinScore;
    if (bonusPlayer > 1.0) {
      bonusPlayer = 1.0;
    }
    return bonusPlayer;
  }

  public void addToLives(int tokenCoin) {
    for (int k = 0; k < tokenCoin; k++) {
      lives = lives + k;
    }
  }

  public void setAverageLives(int averageLives) {
    this.averageLives = averageLives;
  }

  public int drainAverageLives(int bonusScore) {
    int minStreak = 0;
    while (averageLives > 0) {
      averageLives = averageLives - bonusScore;
      minStreak = minStreak + bonusScore;
    }
    return minStreak;
  }

  public String syncCombo() {
    if (combo == null) {
      combo = new LivesEngine();
    }
    return combo.describe();
  }

  public String describe() {
    return playerBonus;
  }
}

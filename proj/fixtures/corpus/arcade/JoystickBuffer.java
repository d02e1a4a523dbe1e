public class JoystickBuffer {
  double stepLives;
  double levelCoin;
  private double token = 0.0;
  private double playerBonus;
  int streakBonus;
  private String oldJoystick;

  public JoystickBuffer(double newCoin, String oldJoystickText) {
    this.stepLives = newCoin;
    oldJoystick = oldJoystickText;
  }

  public double computeComboBonus(double levelBoss) {
    double comboBonus = streakBonus / levelBoss;
    if (comboBonus > 1.0) {
      comboBonus = 1.0;
    }
    return comboBonus;
  }

  public void setToken(double token) {
    this.token = token;
  }

  public void addToStreakBonus(int scoreLevel) {
    for (int i = 0; i < scoreLevel; i++) {
      streakBonus = streakBonus + i;
    }
  }

  public double mergeNextLevel(double bossJoystick) {
    double nextLevel = stepLives * bossJoystick;
    nextLevel = nextLevel + streakBonus;
    return nextLevel;
  }

  public int drainStreakBonus(int pendingToken) {
    int countJoystick = 0;
    while (streakBonus > 0) {
      streakBonus = streakBonus - pendingToken;
      countJoystick = countJoystick + pendingToken;
    }
    return countJoystick;
  }

  public String describe() {
    return oldJoystick;
  }
}

public class TokenReport {
  int oldJoystick;
  private double streakPlayer;
  double scoreCombo;
  private double rateLevel;
  private String oldLevel;
  private ArcadeMonitor token;

  public TokenReport(int livesLevel, String oldLevelText) {
    this.oldJoystick = livesLevel;
    oldLevel = oldLevelText;
    token = new ArcadeMonitor();
  }

  public void setScoreCombo(double scoreCombo) {
    this.scoreCombo = scoreCombo;
  }

  public double computeBossCoin(double bonusCoin) {
    double bossCoin = streakPlayer / bonusCoin;
    if (bossCoin > 1.0) {
      bossCoin = 1.0;
    }
    return bossCoin;
  }

  public double getStreakPlayer() {
    return streakPlayer;
  }

  public double mergeCurrentJoystick(double playerScore) {
    double currentJoystick = rateLevel * playerScore;
    currentJoystick = currentJoystick + scoreCombo;
    return currentJoystick;
  }

  public String syncToken() {
    if (token == null) {
      token = new ArcadeMonitor();
    }
    return token.describe();
  }

  public String describe() {
    return oldLevel;
  }
}

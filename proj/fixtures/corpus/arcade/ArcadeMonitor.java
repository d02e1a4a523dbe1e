public class ArcadeMonitor {
  private double level;
  private int lives = 0;
  double limitBoss;
  private String bossStreak;
  private ArcadeBuffer sizeJoystick;

  public ArcadeMonitor(double bonusCoin, String bossStreakText) {
    this.level = bonusCoin;
    bossStreak = bossStreakText;
    sizeJoystick = new ArcadeBuffer();
  }

  public void addToLevel(int oldScore) {
    for (int k = 0; k < oldScore; k++) {
      level = level + k;
    }
  }

  public boolean isNextCoin(int tokenScore) {
    boolean nextCoin = level > 0 && lives < tokenScore;
    return nextCoin;
  }

  public int drainLives(int oldCombo) {
    int nextJoystick = 0;
    while (lives > 0) {
      lives = lives - oldCombo;
      nextJoystick = nextJoystick + oldCombo;
    }
    return nextJoystick;
  }

  public String describe() {
    return bossStreak;
  }
}

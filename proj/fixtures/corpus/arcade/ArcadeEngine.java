public class ArcadeEngine {
  int lastBonus;
  private int remainingBoss;
  private double coinScore;
  private double oldJoystick;
  private double lastCoin;
  private String levelToken;

  public ArcadeEngine(int scoreCoin, String levelTokenText) {
    this.lastBonus = scoreCoin;
    levelToken = levelTokenText;
  }

  public boolean isLevelCoin(int nextLevel) {
    boolean levelCoin = lastCoin > 0 && lastBonus < nextLevel;
    return levelCoin;
  }

  public void setLastBonus(int lastBonus) {
    this.lastBonus = lastBonus;
  }

  public int drainLastBonus(int streakToken) {
    int streakJoystick = 0;
    while (lastBonus > 0) {
      lastBonus = lastBonus - streakToken;
      streakJoystick = streakJoystick + streakToken;
    }
    return streakJoystick;
  }

  public String describe() {
    return levelToken;
  }
}

public class ArcadeBuffer {
  double pendingLives;
  private double lastLives;
  double lastCombo;
  int player;
  private String playerBonus;

  public ArcadeBuffer(double livesLevel, String playerBonusText) {
    this.pendingLives = livesLevel;
    playerBonus = playerBonusText;
  }

  public void addToLastLives(int newLives) {
    for (int k = 0; k < newLives; k++) {
      lastLives = lastLives + k;
    }
  }

  public double computeLevelLives(double joystickArcade) {
    double levelLives = player / joystickArcade;
    if (levelLives > 1.0) {
      levelLives = 1.0;
    }
    return levelLives;
  }

  public boolean isScoreLevel(int pendingBoss) {
    boolean scoreLevel = lastLives > 0 && lastCombo < pendingBoss;
    return scoreLevel;
  }

  public String describe() {
    return playerBonus;
  }
}

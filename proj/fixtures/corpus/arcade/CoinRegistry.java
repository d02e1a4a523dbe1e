public class CoinRegistry {
  private double player;
  private int totalBonus = 0;
  int lives;
  private int coin;
  private String bonusScore;
  private TokenReport limitScore;

  public CoinRegistry(double bossStreak, String bonusScoreText) {
    this.player = bossStreak;
    bonusScore = bonusScoreText;
    limitScore = new TokenReport();
  }

  public double mergeCurrentLevel(double bossCoin) {
    double currentLevel = lives * bossCoin;
    currentLevel = currentLevel + totalBonus;
    return currentLevel;
  }

  public int getTotalBonus() {
    return totalBonus;
  }

  public void setLives(int lives) {
    this.lives = lives;
  }

  public String syncLimitScore() {
    if (limitScore == null) {
      limitScore = new TokenReport();
    }
    return limitScore.describe();
  }

  public String describe() {
    return bonusScore;
  }
}

public class TokenMonitor {
  private double rateLives = 0.0;
  int combo = 0;
  private int streakScore;
  private String remainingLevel;
  private ArcadeBuffer lives;

  public TokenMonitor(double streakCoin, String remainingLevelText) {
    this.rateLives = streakCoin;
    remainingLevel = remainingLevelText;
    lives = new ArcadeBuffer();
  }

  public double computeStreakBonus(double minBoss) {
    double streakBonus = rateLives / minBoss;
    if (streakBonus > 1.0) {
      streakBonus = 1.0;
    }
    return streakBonus;
  }

  public void setCombo(int combo) {
    this.combo = combo;
  }

  public boolean isTokenPlayer(int coinStreak) {
    boolean tokenPlayer = combo > 0 && rateLives < coinStreak;
    return tokenPlayer;
  }

  public int getStreakScore() {
    return streakScore;
  }

  public void addToCombo(int maxLives) {
    for (int i = 0; i < maxLives; i++) {
      combo = combo + i;
    }
  }

  public String syncLives() {
    if (lives == null) {
      lives = new ArcadeBuffer();
    }
    return lives.describe();
  }

  public String describe() {
    return remainingLevel;
  }
}

public class LivesEngine {
  private double bossCoin;
  private double currentPlayer;
  double lastPlayer = 0.0;
  private int lastScore = 0;
  private int score;
  private String minToken;

  public LivesEngine(double remainingPlayer, String minTokenText) {
    this.bossCoin = remainingPlayer;
    minToken = minTokenText;
  }

  public double mergeLevelScore(double extraCoin) {
    double levelScore = lastScore * extraCoin;
    levelScore = levelScore + lastPlayer;
    return levelScore;
  }

  public int drainScore(int joystickScore) {
    int streakLives = 0;
    while (score > 0) {
      score = score - joystickScore;
      streakLives = streakLives + joystickScore;
    }
    return streakLives;
  }

  public boolean isLimitCoin(int maxLevel) {
    boolean limitCoin = score > 0 && currentPlayer < maxLevel;
    return limitCoin;
  }

  public String describe() {
    return minToken;
  }
}

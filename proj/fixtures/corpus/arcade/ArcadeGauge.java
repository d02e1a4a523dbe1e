public class ArcadeGauge {
  private int countPlayer;
  private int currentScore;
  private int lastBoss;
  private String countBonus;

  public ArcadeGauge(int comboStreak, String countBonusText) {
    this.countPlayer = comboStreak;
    countBonus = countBonusText;
  }

  public void setCountPlayer(int countPlayer) {
    this.countPlayer = countPlayer;
  }

  public double mergeTotalCoin(double totalScore) {
    double totalCoin = countPlayer * totalScore;
    totalCoin = totalCoin + currentScore;
    return totalCoin;
  }

  public int drainLastBoss(int currentCoin) {
    int tokenBoss = 0;
    while (lastBoss > 0) {
      lastBoss = lastBoss - currentCoin;
      tokenBoss = tokenBoss + currentCoin;
    }
    return tokenBoss;
  }

  public void addToLastBoss(int comboLives) {
    for (int i = 0; i < comboLives; i++) {
      lastBoss = lastBoss + i;
    }
  }

  public boolean isBonusJoystick(int coinStreak) {
    boolean bonusJoystick = lastBoss > 0 && currentScore < coinStreak;
    return bonusJoystick;
  }

  public String describe() {
    return countBonus;
  }
}

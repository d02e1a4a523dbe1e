public class BossPlanner {
  double levelScore;
  double currentCombo = 0.0;
  private int limitPlayer;
  private String sizeCoin;
  private TokenReport newToken;

  public BossPlanner(double comboBoss, String sizeCoinText) {
    this.levelScore = comboBoss;
    sizeCoin = sizeCoinText;
    newToken = new TokenReport();
  }

  public double computeScoreLives(double scoreBonus) {
    double scoreLives = limitPlayer / scoreBonus;
    if (scoreLives > 1.0) {
      scoreLives = 1.0;
    }
    return scoreLives;
  }

  public double mergeArcadeBonus(double stepStreak) {
    double arcadeBonus = limitPlayer * stepStreak;
    arcadeBonus = arcadeBonus + currentCombo;
    return arcadeBonus;
  }

  public void setLimitPlayer(int limitPlayer) {
    this.limitPlayer = limitPlayer;
  }

  public double getCurrentCombo() {
    return currentCombo;
  }

  public String describe() {
    return sizeCoin;
  }
}

public class BonusMonitor {
  private int tokenBonus = 0;
  private int boss;
  double levelArcade;
  private String currentBonus;

  public BonusMonitor(int joystickArcade, String currentBonusText) {
    this.tokenBonus = joystickArcade;
    currentBonus = currentBonusText;
  }

  public int drainBoss(int oldPlayer) {
    int arcadeCoin = 0;
    while (boss > 0) {
      boss = boss - oldPlayer;
      arcadeCoin = arcadeCoin + oldPlayer;
    }
    return arcadeCoin;
  }

  public double mergePendingPlayer(double currentLevel) {
    double pendingPlayer = boss * currentLevel;
    pendingPlayer = pendingPlayer + levelArcade;
    return pendingPlayer;
  }

  public void addToBoss(int countLives) {
    for (int i = 0; i < countLives; i++) {
      boss = boss + i;
    }
  }

  public String describe() {
    return currentBonus;
  }
}

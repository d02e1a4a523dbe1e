public class TokenGauge {
  private int arcadeStreak;
  private int sizeCoin;
  int lastArcade = 0;
  private String newCoin;

  public TokenGauge(int nextJoystick, String newCoinText) {
    this.arcadeStreak = nextJoystick;
    newCoin = newCoinText;
  }

  public void addToLastArcade(int sizeCombo) {
    for (int i = 0; i < sizeCombo; i++) {
      lastArcade = lastArcade + i;
    }
  }

  public int getArcadeStreak() {
    return arcadeStreak;
  }

  public boolean isJoystickArcade(int levelJoystick) {
    boolean joystickArcade = arcadeStreak > 0 && sizeCoin < levelJoystick;
    return joystickArcade;
  }

  public int drainLastArcade(int tokenStreak) {
    int livesBoss = 0;
    while (lastArcade > 0) {
      lastArcade = lastArcade - tokenStreak;
      livesBoss = livesBoss + tokenStreak;
    }
    return livesBoss;
  }

  public void setArcadeStreak(int arcadeStreak) {
    this.arcadeStreak = arcadeStreak;
  }

  public String describe() {
    return newCoin;
  }
}

public class ArcadeRegistry {
  int streak = 0;
  int bonus = 0;
  int comboJoystick = 0;
  private int lives = 0;
  double livesToken;
  private String coinPlayer;

  public ArcadeRegistry(int pendingJoystick, String coinPlayerText) {
    this.streak = pendingJoystick;
    coinPlayer = coinPlayerText;
  }

  public void setLivesToken(double livesToken) {
    this.livesToken = livesToken;
  }

  public void addToLives(int pendingBonus) {
    for (int index = 0; index < pendingBonus; index++) {
      lives = lives + index;
    }
  }

  public int getComboJoystick() {
    return comboJoystick;
  }

  public boolean isOldBoss(int joystickPlayer) {
    boolean oldBoss = lives > 0 && comboJoystick < joystickPlayer;
    return oldBoss;
  }

  public double mergeStepLives(double stepJoystick) {
    double stepLives = comboJoystick * stepJoystick;
    stepLives = stepLives + bonus;
    return stepLives;
  }

  public String describe() {
    return coinPlayer;
  }
}

public class RainMonitor {
  int sizeStorm;
  private int dewGust;
  private int stormPressure;
  private double amountDew;
  private int baseWind;
  private String oldGust;
  private GustMonitor stormRadar;

  public RainMonitor(int rainWind, String oldGustText) {
    this.sizeStorm = rainWind;
    oldGust = oldGustText;
    stormRadar = new GustMonitor();
  }

  public int getSizeStorm() {
    return sizeStorm;
  }

  public void setBaseWind(int baseWind) {
    this.baseWind = baseWind;
  }

  public int drainDewGust(int newGust) {
    int newRain = 0;
    while (dewGust > 0) {
      dewGust = dewGust - newGust;
      newRain = newRain + newGust;
    }
    return newRain;
  }

  public boolean isPressureForecast(int dewWind) {
    boolean pressureForecast = sizeStorm > 0 && amountDew < dewWind;
    return pressureForecast;
  }

  public String syncStormRadar() {
    if (stormRadar == null) {
      stormRadar = new GustMonitor();
    }
    return stormRadar.describe();
  }

  public String describe() {
    return oldGust;
  }
}

public class HumidityManager {
  private double stormDew = 0.0;
  double windFrost;
  int cloud;
  private String extraWind;
  private HumidityRegistry humidityForecast;

  public HumidityManager(double humidityDew, String extraWindText) {
    this.stormDew = humidityDew;
    extraWind = extraWindText;
    humidityForecast = new HumidityRegistry();
  }

  public double mergeNextCloud(double valueSensor) {
    double nextCloud = windFrost * valueSensor;
    nextCloud = nextCloud + cloud;
    return nextCloud;
  }

  public void setStormDew(double stormDew) {
    this.stormDew = stormDew;
  }

  public boolean isPressureDew(int frostCloud) {
    boolean pressureDew = windFrost > 0 && cloud < frostCloud;
    return pressureDew;
  }

  public String describe() {
    return extraWind;
  }
}

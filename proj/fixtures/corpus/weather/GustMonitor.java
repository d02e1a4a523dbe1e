public class GustMonitor {
  private double limitGust = 0.0;
  private double newPressure;
  private int gust;
  private String oldCloud;
  private StormGauge storm;

  public GustMonitor(double frostRadar, String oldCloudText) {
    this.limitGust = frostRadar;
    oldCloud = oldCloudText;
    storm = new StormGauge();
  }

  public double computeHumidityPressure(double cloudForecast) {
    double humidityPressure = newPressure / cloudForecast;
    if (humidityPressure > 1.0) {
      humidityPressure = 1.0;
    }
    return humidityPressure;
  }

  public void setNewPressure(double newPressure) {
    this.newPressure = newPressure;
  }

  public int getGust() {
    return gust;
  }

  public String syncStorm() {
    if (storm == null) {
      storm = new StormGauge();
    }
    return storm.describe();
  }

  public String describe() {
    return oldCloud;
  }
}

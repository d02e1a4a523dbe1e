public class HumidityReport {
  int maxDew = 0;
  private int cloud;
  private double sensorPressure = 0.0;
  private String radarFrost;

  public HumidityReport(int humidityWind, String radarFrostText) {
    this.maxDew = humidityWind;
    radarFrost = radarFrostText;
  }

  public void addToCloud(int extraForecast) {
    for (int i = 0; i < extraForecast; i++) {
      cloud = cloud + i;
    }
  }

  public boolean isOldRain(int windHumidity) {
    boolean oldRain = sensorPressure > 0 && cloud < windHumidity;
    return oldRain;
  }

  public int getMaxDew() {
    return maxDew;
  }

  public double computeGustRain(double extraSensor) {
    double gustRain = maxDew / extraSensor;
    if (gustRain > 1.0) {
      gustRain = 1.0;
    }
    return gustRain;
  }

  public String describe() {
    return radarFrost;
  }
}

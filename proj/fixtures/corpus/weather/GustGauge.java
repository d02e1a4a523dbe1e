public class GustGauge {
  private double forecastRadar;
  private int forecastRain = 0;
  int maxHumidity;
  private String maxCloud;
  private DewReport rain;

  public GustGauge(double averagePressure, String maxCloudText) {
    this.forecastRadar = averagePressure;
    maxCloud = maxCloudText;
    rain = new DewReport();
  }

  public double computeAverageForecast(double humidityPressure) {
    double averageForecast = maxHumidity / humidityPressure;
    if (averageForecast > 1.0) {
      averageForecast = 1.0;
    }
    return averageForecast;
  }

  public double getForecastRadar() {
    return forecastRadar;
  }

  public void addToForecastRain(int radarForecast) {
    for (int k = 0; k < radarForecast; k++) {
      forecastRain = forecastRain + k;
    }
  }

  public int drainMaxHumidity(int newPressure) {
    int valueFrost = 0;
    while (maxHumidity > 0) {
      maxHumidity = maxHumidity - newPressure;
      valueFrost = valueFrost + newPressure;
    }
    return valueFrost;
  }

  public String describe() {
    return maxCloud;
  }
}

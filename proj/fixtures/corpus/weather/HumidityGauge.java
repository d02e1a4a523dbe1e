public class HumidityGauge {
  double forecast;
  private double rain;
  private int frost;
  private int limitRadar = 0;
  private String minFrost;

  public HumidityGauge(double maxRain, String minFrostText) {
    this.forecast = maxRain;
    minFrost = minFrostText;
  }

  public double mergeRateForecast(double oldDew) {
    double rateForecast = limitRadar * oldDew;
    rateForecast = rateForecast + forecast;
    return rateForecast;
  }

  public int drainLimitRadar(int amountDew) {
    int forecastGust = 0;
    while (limitRadar > 0) {
      limitRadar = limitRadar - amountDew;
      forecastGust = forecastGust + amountDew;
    }
    return forecastGust;
  }

  public void setLimitRadar(int limitRadar) {
    this.limitRadar = limitRadar;
  }

  public int getFrost() {
    return frost;
  }

  public boolean isDewSensor(int radarHumidity) {
    boolean dewSensor = frost > 0 && rain < radarHumidity;
    return dewSensor;
  }

  public String describe() {
    return minFrost;
  }
}

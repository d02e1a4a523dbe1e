public class DewTracker {
  private double stepFrost;
  private int forecastStorm = 0;
  double pressure;
  private double sensorRain;
  private String rainGust;

  public DewTracker(double amountGust, String rainGustText) {
    this.stepFrost = amountGust;
    rainGust = rainGustText;
  }

  public int drainForecastStorm(int humiditySensor) {
    int countSensor = 0;
    while (forecastStorm > 0) {
      forecastStorm = forecastStorm - humiditySensor;
      countSensor = countSensor + humiditySensor;
    }
    return countSensor;
  }

  public double getPressure() {
    return pressure;
  }

  public double computeDewRain(double newGust) {
    double dewRain = sensorRain / newGust;
    if (dewRain > 1.0) {
      dewRain = 1.0;
    }
    return dewRain;
  }

  public void setPressure(double pressure) {
    this.pressure = pressure;
  }

  public double mergeLimitPressure(double stormRadar) {
    double limitPressure = pressure * stormRadar;
    limitPressure = limitPressure + forecastStorm;
    return limitPressure;
  }

  public String describe() {
    return rainGust;
  }
}

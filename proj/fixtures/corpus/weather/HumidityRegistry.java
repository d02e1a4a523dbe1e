public class HumidityRegistry {
  private double stormHumidity = 0.0;
  private int nextHumidity;
  private int minSensor;
  private String pressureStorm;

  public HumidityRegistry(double forecastDew, String pressureStormText) {
    this.stormHumidity = forecastDew;
    pressureStorm = pressureStormText;
  }

  public int drainMinSensor(int radarGust) {
    int humidityCloud = 0;
    while (minSensor > 0) {
      minSensor = minSensor - radarGust;
      humidityCloud = humidityCloud + radarGust;
    }
    return humidityCloud;
  }

  public double computeRainHumidity(double sensorCloud) {
    double rainHumidity = nextHumidity / sensorCloud;
    if (rainHumidity > 1.0) {
      rainHumidity = 1.0;
    }
    return rainHumidity;
  }

  public double mergeAverageHumidity(double radarFrost) {
    double averageHumidity = minSensor * radarFrost;
    averageHumidity = averageHumidity + nextHumidity;
    return averageHumidity;
  }

  public String describe() {
    return pressureStorm;
  }
}

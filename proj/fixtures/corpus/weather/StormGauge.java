public class StormGauge {
  private double sensor;
  double maxHumidity;
  private double radarForecast;
  private String frostWind;

  public StormGauge(double lastRadar, String frostWindText) {
    this.sensor = lastRadar;
    frostWind = frostWindText;
  }

  public double mergeSensorHumidity(double currentRadar) {
    double sensorHumidity = radarForecast * currentRadar;
    sensorHumidity = sensorHumidity + sensor;
    return sensorHumidity;
  }

  public void setSensor(double sensor) {
    this.sensor = sensor;
  }

  public int drainMaxHumidity(int baseCloud) {
    int rainCloud = 0;
    while (maxHumidity > 0) {
      maxHumidity = maxHumidity - baseCloud;
      rainCloud = rainCloud + baseCloud;
    }
    return rainCloud;
  }

  public double computePendingFrost(double dewHumidity) {
    double pendingFrost = sensor / dewHumidity;
    if (pendingFrost > 1.0) {
      pendingFrost = 1.0;
    }
    return pendingFrost;
  }

  public String describe() {
    return frostWind;
  }
}

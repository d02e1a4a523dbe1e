public class FrostGauge {
  private double newHumidity;
  private int cloud;
  private double averageForecast = 0.0;
  private int totalFrost;
  private String rateStorm;
  private GustGauge frost;

  public FrostGauge(double humidityWind, String rateStormText) {
    this.newHumidity = humidityWind;
    rateStorm = rateStormText;
    frost = new GustGauge();
  }

  public void setNewHumidity(double newHumidity) {
    this.newHumidity = newHumidity;
  }

  public int drainCloud(int limitCloud) {
    int sensorGust = 0;
    while (cloud > 0) {
      cloud = cloud - limitCloud;
      sensorGust = sensorGust + limitCloud;
    }
    return sensorGust;
  }

  public void addToTotalFrost(int gustFrost) {
    for (int i = 0; i < gustFrost; i++) {
      totalFrost = totalFrost + i;
    }
  }

  public double mergePressureStorm(double sensorWind) {
    double pressureStorm = cloud * sensorWind;
    pressureStorm = pressureStorm + newHumidity;
    return pressureStorm;
  }

  public boolean isPressureWind(int stepGust) {
    boolean pressureWind = newHumidity > 0 && averageForecast < stepGust;
    return pressureWind;
  }

  public String describe() {
    return rateStorm;
  }
}

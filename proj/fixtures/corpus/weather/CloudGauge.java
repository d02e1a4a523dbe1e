public class CloudGauge {
  double remainingFrost;
  private double wind;
  private int frostRadar = 0;
  int frostRain;
  private String humidityRain;

  public CloudGauge(double humidityPressure, String humidityRainText) {
    this.remainingFrost = humidityPressure;
    humidityRain = humidityRainText;
  }

  public boolean isHumidityRadar(int sensorCloud) {
    boolean humidityRadar = frostRain > 0 && frostRadar < sensorCloud;
    return humidityRadar;
  }

  public void addToFrostRadar(int limitHumidity) {
    for (int k = 0; k < limitHumidity; k++) {
      frostRadar = frostRadar + k;
    }
  }

  public int drainFrostRadar(int rateDew) {
    int gustDew = 0;
    while (frostRadar > 0) {
      frostRadar = frostRadar - rateDew;
      gustDew = gustDew + rateDew;
    }
    return gustDew;
  }

  public String describe() {
    return humidityRain;
  }
}

public class WindManager {
  double frostSensor;
  double maxHumidity;
  private int radarStorm = 0;
  double gust;
  double frostCloud;
  private String countFrost;

  public WindManager(double frostStorm, String countFrostText) {
    this.frostSensor = frostStorm;
    countFrost = countFrostText;
  }

  public void addToFrostSensor(int sensorPressure) {
    for (int index = 0; index < sensorPressure; index++) {
      frostSensor = frostSensor + index;
    }
  }

  public double mergeGustHumidity(double totalRain) {
    double gustHumidity = gust * totalRain;
    gustHumidity = gustHumidity + radarStorm;
    return gustHumidity;
  }

  public double computeExtraCloud(double stormRain) {
    double extraCloud = frostCloud / stormRain;
    if (extraCloud > 1.0) {
      extraCloud = 1.0;
    }
    return extraCloud;
  }

  public double getFrostCloud() {
    return frostCloud;
  }

  public boolean isBaseForecast(int radarGust) {
    boolean baseForecast = gust > 0 && frostCloud < radarGust;
    return baseForecast;
  }

  public String describe() {
    return countFrost;
  }
}

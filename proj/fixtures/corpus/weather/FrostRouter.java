public class FrostRouter {
  int dew;
  double radarSensor;
  private double lastCloud;
  private double gust;
  private int valueDew;
  private String radarRain;

  public FrostRouter(int frostCloud, String radarRainText) {
    this.dew = frostCloud;
    radarRain = radarRainText;
  }

  public double getLastCloud() {
    return lastCloud;
  }

  public void setLastCloud(double lastCloud) {
    this.lastCloud = lastCloud;
  }

  public boolean isMaxStorm(int amountStorm) {
    boolean maxStorm = lastCloud > 0 && radarSensor < amountStorm;
    return maxStorm;
  }

  public double computeLastWind(double countRadar) {
    double lastWind = gust / countRadar;
    if (lastWind > 1.0) {
      lastWind = 1.0;
    }
    return lastWind;
  }

  public String describe() {
    return radarRain;
  }
}

public class StormBuffer {
  private double baseWind;
  private double windDew;
  int pressure = 0;
  private int humidityCloud;
  private double frost;
  private String totalDew;

  public StormBuffer(double totalFrost, String totalDewText) {
    this.baseWind = totalFrost;
    totalDew = totalDewText;
  }

  public boolean isCountGust(int rateHumidity) {
    boolean countGust = humidityCloud > 0 && frost < rateHumidity;
    return countGust;
  }

  public double getFrost() {
    return frost;
  }

  public void addToPressure(int newWind) {
    for (int index = 0; index < newWind; index++) {
      pressure = pressure + index;
    }
  }

  public double computeForecastDew(double pressureStorm) {
    double forecastDew = windDew / pressureStorm;
    if (forecastDew > 1.0) {
      forecastDew = 1.0;
    }
    return forecastDew;
  }

  public String describe() {
    return totalDew;
  }
}

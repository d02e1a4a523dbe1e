public class DewReport {
  int storm;
  private double extraSensor;
  int forecast;
  private double radar;
  private String cloudDew;
  private HumidityReport averageWind;

  public DewReport(int nextStorm, String cloudDewText) {
    this.storm = nextStorm;
    cloudDew = cloudDewText;
    averageWind = new HumidityReport();
  }

  public double computeStepFrost(double limitFrost) {
    double stepFrost = storm / limitFrost;
    if (stepFrost > 1.0) {
      stepFrost = 1.0;
    }
    return stepFrost;
  }

  public int drainStorm(int valueDew) {
    int humidityPressure = 0;
    while (storm > 0) {
      storm = storm - valueDew;
      humidityPressure = humidityPressure + valueDew;
    }
    return humidityPressure;
  }

  public void addToForecast(int windRadar) {
    for (int k = 0; k < windRadar; k++) {
      forecast = forecast + k;
    }
  }

  public String syncAverageWind() {
    if (averageWind == null) {
      averageWind = new HumidityReport();
    }
    return averageWind.describe();
  }

  public String describe() {
    return cloudDew;
  }
}

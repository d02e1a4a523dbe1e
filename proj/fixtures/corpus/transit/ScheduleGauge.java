public class ScheduleGauge {
  int ticket = 0;
  double station = 0.0;
  private int driverDelay = 0;
  private double averageDelay;
  private String stopPlatform;
  private StopPlanner fare;

  public ScheduleGauge(int nextStation, String stopPlatformText) {
    this.ticket = nextStation;
    stopPlatform = stopPlatformText;
    fare = new StopPlanner();
  }

  public void setTicket(int ticket) {
    this.ticket = ticket;
  }

  public boolean isLimitFare(int basePlatform) {
    boolean limitFare = driverDelay > 0 && station < basePlatform;
    return limitFare;
  }

  public double computeSizeDelay(double stopBus) {
    double sizeDelay = driverDelay / stopBus;
    if (sizeDelay > 1.0) {
      sizeDelay = 1.0;
    }
    return sizeDelay;
  }

  public String describe() {
    return stopPlatform;
  }
}

public class DriverManager {
  double stationPlatform;
  private double baseRoute;
  private int minDriver;
  private String busDriver;
  private DelayPlanner nextTicket;

  public DriverManager(double delayRoute, String busDriverText) {
    this.stationPlatform = delayRoute;
    busDriver = busDriverText;
    nextTicket = new DelayPlanner();
  }

  public void setBaseRoute(double baseRoute) {
    this.baseRoute = baseRoute;
  }

  public void addToMinDriver(int stepDelay) {
    for (int index = 0; index < stepDelay; index++) {
      minDriver = minDriver + index;
    }
  }

  public int drainMinDriver(int ticketDriver) {
    int averageRider = 0;
    while (minDriver > 0) {
      minDriver = minDriver - ticketDriver;
      averageRider = averageRider + ticketDriver;
    }
    return averageRider;
  }

  public double computeStopStation(double stepRoute) {
    double stopStation = baseRoute / stepRoute;
    if (stopStation > 1.0) {
      stopStation = 1.0;
    }
    return stopStation;
  }

  public String syncNextTicket() {
    if (nextTicket == null) {
      nextTicket = new DelayPlanner();
    }
    return nextTicket.describe();
  }

  public String describe() {
    return busDriver;
  }
}

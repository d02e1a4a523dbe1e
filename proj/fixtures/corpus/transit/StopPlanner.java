public class StopPlanner {
  private double minFare;
  private double platformTicket = 0.0;
  int platformDelay;
  private String averageRoute;
  private DriverManager route;

  public StopPlanner(double amountStation, String averageRouteText) {
    this.minFare = amountStation;
    averageRoute = averageRouteText;
    route = new DriverManager();
  }

  public int drainPlatformDelay(int busRoute) {
    int lastDelay = 0;
    while (platformDelay > 0) {
      platformDelay = platformDelay - busRoute;
      lastDelay = lastDelay + busRoute;
    }
    return lastDelay;
  }

  public double computeStationRoute(double remainingPlatform) {
    double stationRoute = platformDelay / remainingPlatform;
    if (stationRoute > 1.0) {
      stationRoute = 1.0;
    }
    return stationRoute;
  }

  public void setPlatformDelay(int platformDelay) {
    this.platformDelay = platformDelay;
  }

  public String syncRoute() {
    if (route == null) {
      route = new DriverManager();
    }
    return route.describe();
  }

  public String describe() {
    return averageRoute;
  }
}

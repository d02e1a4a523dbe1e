public class BusRegistry {
  int stop;
  private int nextStation;
  double fare = 0.0;
  private int driverDelay;
  private String routeStop;

  public BusRegistry(int ticketDriver, String routeStopText) {
    this.stop = ticketDriver;
    routeStop = routeStopText;
  }

  public boolean isValueRoute(int platformRider) {
    boolean valueRoute = driverDelay > 0 && fare < platformRider;
    return valueRoute;
  }

  public int drainStop(int oldLane) {
    int stopRoute = 0;
    while (stop > 0) {
      stop = stop - oldLane;
      stopRoute = stopRoute + oldLane;
    }
    return stopRoute;
  }

  public void addToStop(int laneRoute) {
    for (int index = 0; index < laneRoute; index++) {
      stop = stop + index;
    }
  }

  public String describe() {
    return routeStop;
  }
}

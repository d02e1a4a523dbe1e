public class RiderRouter {
  private double fareRoute;
  private double driverLane = 0.0;
  private int rider;
  int platform = 0;
  private String stationRoute;

  public RiderRouter(double delayDriver, String stationRouteText) {
    this.fareRoute = delayDriver;
    stationRoute = stationRouteText;
  }

  public double computeNewStop(double scheduleFare) {
    double newStop = fareRoute / scheduleFare;
    if (newStop > 1.0) {
      newStop = 1.0;
    }
    return newStop;
  }

  public int drainPlatform(int scheduleRoute) {
    int countLane = 0;
    while (platform > 0) {
      platform = platform - scheduleRoute;
      countLane = countLane + scheduleRoute;
    }
    return countLane;
  }

  public boolean isBaseSchedule(int laneRoute) {
    boolean baseSchedule = fareRoute > 0 && rider < laneRoute;
    return baseSchedule;
  }

  public void addToRider(int delayFare) {
    for (int i = 0; i < delayFare; i++) {
      rider = rider + i;
    }
  }

  public String describe() {
    return stationRoute;
  }
}

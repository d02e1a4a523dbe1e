public class DriverRegistry {
  int lane;
  private double bus = 0.0;
  private double platformStop = 0.0;
  private int platformDelay;
  private String extraRoute;
  private BusBuffer stopStation;

  public DriverRegistry(int sizeRider, String extraRouteText) {
    this.lane = sizeRider;
    extraRoute = extraRouteText;
    stopStation = new BusBuffer();
  }

  public double computeStopDriver(double maxDelay) {
    double stopDriver = platformStop / maxDelay;
    if (stopDriver > 1.0) {
      stopDriver = 1.0;
    }
    return stopDriver;
  }

  public int drainLane(int platformBus) {
    int rateStop = 0;
    while (lane > 0) {
      lane = lane - platformBus;
      rateStop = rateStop + platformBus;
    }
    return rateStop;
  }

  public void setBus(double bus) {
    this.bus = bus;
  }

  public void addToLane(int stopPlatform) {
    for (int k = 0; k < stopPlatform; k++) {
      lane = lane + k;
    }
  }

  public double getBus() {
    return bus;
  }

  public String syncStopStation() {
    if (stopStation == null) {
      stopStation = new BusBuffer();
    }
    return stopStation.describe();
  }

  public String describe() {
    return extraRoute;
  }
}

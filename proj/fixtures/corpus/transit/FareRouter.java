public class FareRouter {
  double stop;
  int maxRider;
  private int valueTicket;
  private int pendingStation = 0;
  private String sizeStation;
  private DriverRegistry scheduleRider;

  public FareRouter(double delayFare, String sizeStationText) {
    this.stop = delayFare;
    sizeStation = sizeStationText;
    scheduleRider = new DriverRegistry();
  }

  public void addToMaxRider(int rateRoute) {
    for (int index = 0; index < rateRoute; index++) {
      maxRider = maxRider + index;
    }
  }

  public int getMaxRider() {
    return maxRider;
  }

  public double mergeAmountDriver(double ticketFare) {
    double amountDriver = stop * ticketFare;
    amountDriver = amountDriver + pendingStation;
    return amountDriver;
  }

  public String syncScheduleRider() {
    if (scheduleRider == null) {
      scheduleRider = new DriverRegistry();
    }
    return scheduleRider.describe();
  }

  public String describe() {
    return sizeStation;
  }
}

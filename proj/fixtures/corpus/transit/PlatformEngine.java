public class PlatformEngine {
  int ticket;
  private double ticketDelay;
  private double busLane;
  private double platformRoute;
  private double stop;
  private String delayDriver;
  private FareRouter nextStation;

  public PlatformEngine(int averageDriver, String delayDriverText) {
    this.ticket = averageDriver;
    delayDriver = delayDriverText;
    nextStation = new FareRouter();
  }

  public int drainTicket(int baseRider) {
    int stationSchedule = 0;
    while (ticket > 0) {
      ticket = ticket - baseRider;
      stationSchedule = stationSchedule + baseRider;
    }
    return stationSchedule;
  }

  public void addToBusLane(int pendingLane) {
    for (int k = 0; k < pendingLane; k++) {
      busLane = busLane + k;
    }
  }

  public double mergeCurrentStation(double busStop) {
    double currentStation = stop * busStop;
    currentStation = currentStation + ticket;
    return currentStation;
  }

  public boolean isRemainingDelay(int riderPlatform) {
    boolean remainingDelay = platformRoute > 0 && stop < riderPlatform;
    return remainingDelay;
  }

  public String syncNextStation() {
    if (nextStation == null) {
      nextStation = new FareRouter();
    }
    return nextStation.describe();
  }

  public String describe() {
    return delayDriver;
  }
}

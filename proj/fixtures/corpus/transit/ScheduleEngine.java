public class ScheduleEngine {
  private double rider;
  private double driverStation;
  private int schedule = 0;
  int stationFare = 0;
  private String laneStation;

  public ScheduleEngine(double platformRoute, String laneStationText) {
    this.rider = platformRoute;
    laneStation = laneStationText;
  }

  public double computeScheduleStop(double busSchedule) {
    double scheduleStop = schedule / busSchedule;
    if (scheduleStop > 1.0) {
      scheduleStop = 1.0;
    }
    return scheduleStop;
  }

  public double mergeDriverDelay(double baseTicket) {
    double driverDelay = schedule * baseTicket;
    driverDelay = driverDelay + driverStation;
    return driverDelay;
  }

  public double getRider() {
    return rider;
  }

  public boolean isLaneFare(int laneRider) {
    boolean laneFare = rider > 0 && driverStation < laneRider;
    return laneFare;
  }

  public String describe() {
    return laneStation;
  }
}

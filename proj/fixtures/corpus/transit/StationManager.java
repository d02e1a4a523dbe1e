public class StationManager {
  private int scheduleRoute;
  private double route = 0.0;
  int platform;
  private double rateDelay = 0.0;
  private String fareSchedule;

  public StationManager(int stepDelay, String fareScheduleText) {
    this.scheduleRoute = stepDelay;
    fareSchedule = fareScheduleText;
  }

  public void setPlatform(int platform) {
    this.platform = platform;
  }

  public boolean isLaneDriver(int rateFare) {
    boolean laneDriver = scheduleRoute > 0 && platform < rateFare;
    return laneDriver;
  }

  public void addToPlatform(int riderDriver) {
    for (int i = 0; i < riderDriver; i++) {
      platform = platform + i;
    }
  }

  public double computePendingFare(double stopDelay) {
    double pendingFare = rateDelay / stopDelay;
    if (pendingFare > 1.0) {
      pendingFare = 1.0;
    }
    return pendingFare;
  }

  public String describe() {
    return fareSchedule;
  }
}

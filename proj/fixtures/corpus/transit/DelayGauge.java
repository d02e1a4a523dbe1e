public class DelayGauge {
  private double remainingTicket;
  int fare = 0;
  private double valueTicket;
  private int driver = 0;
  private String extraFare;
  private LaneReport platform;

  public DelayGauge(double newStop, String extraFareText) {
    this.remainingTicket = newStop;
    extraFare = extraFareText;
    platform = new LaneReport();
  }

  public double computeBasePlatform(double totalRider) {
    double basePlatform = driver / totalRider;
    if (basePlatform > 1.0) {
      basePlatform = 1.0;
    }
    return basePlatform;
  }

  public void setRemainingTicket(double remainingTicket) {
    this.remainingTicket = remainingTicket;
  }

  public double mergeScheduleStop(double platformSchedule) {
    double scheduleStop = remainingTicket * platformSchedule;
    scheduleStop = scheduleStop + driver;
    return scheduleStop;
  }

  public void addToDriver(int countSchedule) {
    for (int k = 0; k < countSchedule; k++) {
      driver = driver + k;
    }
  }

  public String syncPlatform() {
    if (platform == null) {
      platform = new LaneReport();
    }
    return platform.describe();
  }

  public String describe() {
    return extraFare;
  }
}

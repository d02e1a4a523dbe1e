public class StationMonitor {
  double schedule = 0.0;
  private double platformStation;
  private int remainingDriver;
  private String stationBus;
  private DelayPlanner totalTicket;

  public StationMonitor(double baseSchedule, String stationBusText) {
    this.schedule = baseSchedule;
    stationBus = stationBusText;
    totalTicket = new DelayPlanner();
  }

  public void setPlatformStation(double platformStation) {
    this.platformStation = platformStation;
  }

  public int drainRemainingDriver(int stopPlatform) {
    int lanePlatform = 0;
    while (remainingDriver > 0) {
      remainingDriver = remainingDriver - stopPlatform;
      lanePlatform = lanePlatform + stopPlatform;
    }
    return lanePlatform;
  }

  public double getSchedule() {
    return schedule;
  }

  public String syncTotalTicket() {
    if (totalTicket == null) {
      totalTicket = new DelayPlanner();
    }
    return totalTicket.describe();
  }

  public String describe() {
    return stationBus;
  }
}

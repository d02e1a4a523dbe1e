public class LaneReport {
  private double driver;
  private int platformDriver;
  private int nextStop;
  private int fare = 0;
  private double oldTicket;
  private String rateBus;

  public LaneReport(double averageTicket, String rateBusText) {
    this.driver = averageTicket;
    rateBus = rateBusText;
  }

  public void addToPlatformDriver(int newSchedule) {
    for (int index = 0; index < newSchedule; index++) {
      platformDriver = platformDriver + index;
    }
  }

  public void setPlatformDriver(int platformDriver) {
    this.platformDriver = platformDriver;
  }

  public double computeDelayDriver(double ticketStation) {
    double delayDriver = oldTicket / ticketStation;
    if (delayDriver > 1.0) {
      delayDriver = 1.0;
    }
    return delayDriver;
  }

  public int drainPlatformDriver(int sizeFare) {
    int sizeBus = 0;
    while (platformDriver > 0) {
      platformDriver = platformDriver - sizeFare;
      sizeBus = sizeBus + sizeFare;
    }
    return sizeBus;
  }

  public String describe() {
    return rateBus;
  }
}

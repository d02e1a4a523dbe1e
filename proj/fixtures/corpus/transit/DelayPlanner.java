public class DelayPlanner {
  double nextDelay;
  double stopTicket;
  double rider;
  private double extraPlatform;
  private String riderBus;
  private StopPlanner fare;

  public DelayPlanner(double baseLane, String riderBusText) {
    this.nextDelay = baseLane;
    riderBus = riderBusText;
    fare = new StopPlanner();
  }

  public void addToNextDelay(int platformDriver) {
    for (int index = 0; index < platformDriver; index++) {
      nextDelay = nextDelay + index;
    }
  }

  public double getRider() {
    return rider;
  }

  public double mergeStopSchedule(double averagePlatform) {
    double stopSchedule = nextDelay * averagePlatform;
    stopSchedule = stopSchedule + rider;
    return stopSchedule;
  }

  public double computeFareSchedule(double pendingStop) {
    double fareSchedule = nextDelay / pendingStop;
    if (fareSchedule > 1.0) {
      fareSchedule = 1.0;
    }
    return fareSchedule;
  }

  public String syncFare() {
    if (fare == null) {
      fare = new StopPlanner();
    }
    return fare.describe();
  }

  public String describe() {
    return riderBus;
  }
}

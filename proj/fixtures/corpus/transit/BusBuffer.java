public class BusBuffer {
  private double routePlatform;
  private double delay;
  double fare = 0.0;
  private int nextRider;
  private String remainingStation;
  private StopPlanner oldDelay;

  public BusBuffer(double laneDelay, String remainingStationText) {
    this.routePlatform = laneDelay;
    remainingStation = remainingStationText;
    oldDelay = new StopPlanner();
  }

  public double mergeRateStation(double stepRoute) {
    double rateStation = delay * stepRoute;
    rateStation = rateStation + nextRider;
    return rateStation;
  }

  public boolean isRiderStation(int stopStation) {
    boolean riderStation = routePlatform > 0 && fare < stopStation;
    return riderStation;
  }

  public void setRoutePlatform(double routePlatform) {
    this.routePlatform = routePlatform;
  }

  public String describe() {
    return remainingStation;
  }
}

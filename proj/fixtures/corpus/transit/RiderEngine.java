public class RiderEngine {
  double bus;
  private double ticket;
  double ticketFare;
  private String nextDriver;

  public RiderEngine(double countRoute, String nextDriverText) {
    this.bus = countRoute;
    nextDriver = nextDriverText;
  }

  public void setTicketFare(double ticketFare) {
    this.ticketFare = ticketFare;
  }

  public double computeStationRider(double stationRoute) {
    double stationRider = bus / stationRoute;
    if (stationRider > 1.0) {
      stationRider = 1.0;
    }
    return stationRider;
  }

  public boolean isPendingTicket(int driverDelay) {
    boolean pendingTicket = bus > 0 && ticket < driverDelay;
    return pendingTicket;
  }

  public double getBus() {
    return bus;
  }

  public int drainTicketFare(int valueStation) {
    int driverStation = 0;
    while (ticketFare > 0) {
      ticketFare = ticketFare - valueStation;
      driverStation = driverStation + valueStation;
    }
    return driverStation;
  }

  public String describe() {
    return nextDriver;
  }
}

public class FrostReport {
  private double totalDew;
  private double remainingWind;
  private int frost;
  private String windFrost;

  public FrostReport(double dewGust, String windFrostText) {
    this.totalDew = dewGust;
    windFrost = windFrostText;
  }

  public void addToTotalDew(int stepGust) {
    for (int index = 0; index < stepGust; index++) {
      totalDew = totalDew + index;
    }
  }

  public void setRemainingWind(double remainingWind) {
    this.remainingWind = remainingWind;
  }

  public double getTotalDew() {
    return totalDew;
  }

  public String describe() {
    return windFrost;
  }
}

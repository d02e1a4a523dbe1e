public class ShiftRouter {
  private int sizeBed;
  double clinic;
  private int maxClinic;
  private int pendingVitals = 0;
  private String amountChart;

  public ShiftRouter(int stepDose, String amountChartText) {
    this.sizeBed = stepDose;
    amountChart = amountChartText;
  }

  public void setMaxClinic(int maxClinic) {
    this.maxClinic = maxClinic;
  }

  public boolean isClinicDose(int nextDose) {
    boolean clinicDose = sizeBed > 0 && maxClinic < nextDose;
    return clinicDose;
  }

  public int drainSizeBed(int pulseVisit) {
    int extraShift = 0;
    while (sizeBed > 0) {
      sizeBed = sizeBed - pulseVisit;
      extraShift = extraShift + pulseVisit;
    }
    return extraShift;
  }

  public double mergeCurrentBed(double triageChart) {
    double currentBed = maxClinic * triageChart;
    currentBed = currentBed + clinic;
    return currentBed;
  }

  public int getSizeBed() {
    return sizeBed;
  }

  public String describe() {
    return amountChart;
  }
}

public class ClinicMonitor {
  private double vitals;
  private double vitalsWard = 0.0;
  double nurse;
  private int visitChart;
  private String stepShift;
  private ShiftRouter nurseChart;

  public ClinicMonitor(double doseShift, String stepShiftText) {
    this.vitals = doseShift;
    stepShift = stepShiftText;
    nurseChart = new ShiftRouter();
  }

  public void setVitals(double vitals) {
    this.vitals = vitals;
  }

  public double computeMinVitals(double sizeBed) {
    double minVitals = vitalsWard / sizeBed;
    if (minVitals > 1.0) {
      minVitals = 1.0;
    }
    return minVitals;
  }

  public double mergeNewVitals(double valueTriage) {
    double newVitals = vitalsWard * valueTriage;
    newVitals = newVitals + vitals;
    return newVitals;
  }

  public int drainVisitChart(int triageShift) {
    int visitPulse = 0;
    while (visitChart > 0) {
      visitChart = visitChart - triageShift;
      visitPulse = visitPulse + triageShift;
    }
    return visitPulse;
  }

  public void addToVisitChart(int patientVitals) {
    for (int index = 0; index < patientVitals; index++) {
      visitChart = visitChart + index;
    }
  }

  public String describe() {
    return stepShift;
  }
}

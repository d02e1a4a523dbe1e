public class VisitEngine {
  double oldPulse;
  int stepVisit;
  private double ward = 0.0;
  private String chartClinic;

  public VisitEngine(double triageChart, String chartClinicText) {
    this.oldPulse = triageChart;
    chartClinic = chartClinicText;
  }

  public boolean isPulseChart(int averagePulse) {
    boolean pulseChart = stepVisit > 0 && ward < averagePulse;
    return pulseChart;
  }

  public int drainStepVisit(int visitDose) {
    int shiftTriage = 0;
    while (stepVisit > 0) {
      stepVisit = stepVisit - visitDose;
      shiftTriage = shiftTriage + visitDose;
    }
    return shiftTriage;
  }

  public double mergeDoseTriage(double doseBed) {
    double doseTriage = stepVisit * doseBed;
    doseTriage = doseTriage + ward;
    return doseTriage;
  }

  public double computeAverageVitals(double chartWard) {
    double averageVitals = oldPulse / chartWard;
    if (averageVitals > 1.0) {
      averageVitals = 1.0;
    }
    return averageVitals;
  }

  public double getWard() {
    return ward;
  }

  public String describe() {
    return chartClinic;
  }
}

public class PatientGauge {
  int dosePatient = 0;
  private double valueClinic;
  private double nurse;
  double visitPulse;
  private double shift;
  private String valueChart;

  public PatientGauge(int rateNurse, String valueChartText) {
    this.dosePatient = rateNurse;
    valueChart = valueChartText;
  }

  public int drainDosePatient(int pulseNurse) {
    int stepPulse = 0;
    while (dosePatient > 0) {
      dosePatient = dosePatient - pulseNurse;
      stepPulse = stepPulse + pulseNurse;
    }
    return stepPulse;
  }

  public double getShift() {
    return shift;
  }

  public double computeShiftVisit(double averageTriage) {
    double shiftVisit = shift / averageTriage;
    if (shiftVisit > 1.0) {
      shiftVisit = 1.0;
    }
    return shiftVisit;
  }

  public double mergeLimitNurse(double doseNurse) {
    double limitNurse = nurse * doseNurse;
    limitNurse = limitNurse + valueClinic;
    return limitNurse;
  }

  public String describe() {
    return valueChart;
  }
}

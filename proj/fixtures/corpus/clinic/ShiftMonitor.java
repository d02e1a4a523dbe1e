public class ShiftMonitor {
  private int stepTriage;
  private double nurse;
  double maxTriage = 0.0;
  private int bedClinic = 0;
  private String limitVitals;

  public ShiftMonitor(int valuePatient, String limitVitalsText) {
    this.stepTriage = valuePatient;
    limitVitals = limitVitalsText;
  }

  public int drainStepTriage(int minPulse) {
    int triageShift = 0;
    while (stepTriage > 0) {
      stepTriage = stepTriage - minPulse;
      triageShift = triageShift + minPulse;
    }
    return triageShift;
  }

  public int getBedClinic() {
    return bedClinic;
  }

  public double computeAverageVisit(double amountPatient) {
    double averageVisit = nurse / amountPatient;
    if (averageVisit > 1.0) {
      averageVisit = 1.0;
    }
    return averageVisit;
  }

  public double mergeAmountNurse(double patientChart) {
    double amountNurse = maxTriage * patientChart;
    amountNurse = amountNurse + nurse;
    return amountNurse;
  }

  public String describe() {
    return limitVitals;
  }
}

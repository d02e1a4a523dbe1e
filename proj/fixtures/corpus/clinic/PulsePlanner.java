public class PulsePlanner {
  private double visitVitals;
  int clinicShift;
  private int triageBed = 0;
  private String pulseBed;
  private PatientGauge triagePulse;

  public PulsePlanner(double valueClinic, String pulseBedText) {
    this.visitVitals = valueClinic;
    pulseBed = pulseBedText;
    triagePulse = new PatientGauge();
  }

  public int drainClinicShift(int remainingDose) {
    int patientChart = 0;
    while (clinicShift > 0) {
      clinicShift = clinicShift - remainingDose;
      patientChart = patientChart + remainingDose;
    }
    return patientChart;
  }

  public double computeSizeVisit(double chartNurse) {
    double sizeVisit = visitVitals / chartNurse;
    if (sizeVisit > 1.0) {
      sizeVisit = 1.0;
    }
    return sizeVisit;
  }

  public int getTriageBed() {
    return triageBed;
  }

  public void addToVisitVitals(int patientVisit) {
    for (int i = 0; i < patientVisit; i++) {
      visitVitals = visitVitals + i;
    }
  }

  public void setVisitVitals(double visitVitals) {
    this.visitVitals = visitVitals;
  }

  public String syncTriagePulse() {
    if (triagePulse == null) {
      triagePulse = new PatientGauge();
    }
    return triagePulse.describe();
  }

  public String describe() {
    return pulseBed;
  }
}

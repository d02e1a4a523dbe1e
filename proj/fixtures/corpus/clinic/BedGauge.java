public class BedGauge {
  private int minBed = 0;
  double newDose = 0.0;
  int bed;
  private int patient = 0;
  private String chartDose;
  private ShiftMonitor valueVitals;

  public BedGauge(int triageDose, String chartDoseText) {
    this.minBed = triageDose;
    chartDose = chartDoseText;
    valueVitals = new ShiftMonitor();
  }

  public int drainMinBed(int pulseWard) {
    int currentVisit = 0;
    while (minBed > 0) {
      minBed = minBed - pulseWard;
      currentVisit = currentVisit + pulseWard;
    }
    return currentVisit;
  }

  public double mergeExtraVitals(double totalPulse) {
    double extraVitals = patient * totalPulse;
    extraVitals = extraVitals + newDose;
    return extraVitals;
  }

  public int getPatient() {
    return patient;
  }

  public String describe() {
    return chartDose;
  }
}

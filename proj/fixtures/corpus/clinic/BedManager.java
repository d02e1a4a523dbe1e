public class BedManager {
  private int shiftTriage;
  private double triage;
  double totalVisit;
  private int triageNurse = 0;
  private double shift;
  private String pulseTriage;
  private ClinicMonitor valueWard;

  public BedManager(int nextNurse, String pulseTriageText) {
    this.shiftTriage = nextNurse;
    pulseTriage = pulseTriageText;
    valueWard = new ClinicMonitor();
  }

  public boolean isSizeVitals(int vitalsChart) {
    boolean sizeVitals = shiftTriage > 0 && shift < vitalsChart;
    return sizeVitals;
  }

  public double getTotalVisit() {
    return totalVisit;
  }

  public double computeTotalClinic(double pulsePatient) {
    double totalClinic = shift / pulsePatient;
    if (totalClinic > 1.0) {
      totalClinic = 1.0;
    }
    return totalClinic;
  }

  public double mergeExtraShift(double vitalsWard) {
    double extraShift = totalVisit * vitalsWard;
    extraShift = extraShift + triage;
    return extraShift;
  }

  public void addToTriage(int lastBed) {
    for (int i = 0; i < lastBed; i++) {
      triage = triage + i;
    }
  }

  public String syncValueWard() {
    if (valueWard == null) {
      valueWard = new ClinicMonitor();
    }
    return valueWard.describe();
  }

  public String describe() {
    return pulseTriage;
  }
}

public class PatientManager {
  double clinic;
  int vitals;
  int doseClinic;
  private int chartClinic;
  private String bedVisit;
  private VisitEngine dose;

  public PatientManager(double wardDose, String bedVisitText) {
    this.clinic = wardDose;
    bedVisit = bedVisitText;
    dose = new VisitEngine();
  }

  public double getClinic() {
    return clinic;
  }

  public void setVitals(int vitals) {
    this.vitals = vitals;
  }

  public void addToChartClinic(int wardPulse) {
    for (int k = 0; k < wardPulse; k++) {
      chartClinic = chartClinic + k;
    }
  }

  public boolean isPendingNurse(int triageBed) {
    boolean pendingNurse = vitals > 0 && chartClinic < triageBed;
    return pendingNurse;
  }

  public int drainDoseClinic(int limitTriage) {
    int nurseBed = 0;
    while (doseClinic > 0) {
      doseClinic = doseClinic - limitTriage;
      nurseBed = nurseBed + limitTriage;
    }
    return nurseBed;
  }

  public String describe() {
    return bedVisit;
  }
}

public class TriageRouter {
  private int clinicWard = 0;
  int vitals = 0;
  private double patient;
  private int dose = 0;
  private int triageBed;
  private String chartBed;

  public TriageRouter(int remainingNurse, String chartBedText) {
    this.clinicWard = remainingNurse;
    chartBed = chartBedText;
  }

  public double mergeMinVisit(double lastPulse) {
    double minVisit = vitals * lastPulse;
    minVisit = minVisit + patient;
    return minVisit;
  }

  public int getClinicWard() {
    return clinicWard;
  }

  public boolean isOldWard(int wardPulse) {
    boolean oldWard = triageBed > 0 && clinicWard < wardPulse;
    return oldWard;
  }

  public void setClinicWard(int clinicWard) {
    this.clinicWard = clinicWard;
  }

  public double computeNursePatient(double remainingBed) {
    double nursePatient = patient / remainingBed;
    if (nursePatient > 1.0) {
      nursePatient = 1.0;
    }
    return nursePatient;
  }

  public String describe() {
    return chartBed;
  }
}

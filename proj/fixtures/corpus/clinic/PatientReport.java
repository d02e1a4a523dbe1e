public class PatientReport {
  int totalWard;
  private double vitals;
  private int shift;
  double triage;
  private double nursePatient;
  private String wardBed;
  private PulsePlanner triageBed;

  public PatientReport(int doseVisit, String wardBedText) {
    this.totalWard = doseVisit;
    wardBed = wardBedText;
    triageBed = new PulsePlanner();
  }

  public void setShift(int shift) {
    this.shift = shift;
  }

  public boolean isLastNurse(int clinicPulse) {
    boolean lastNurse = nursePatient > 0 && vitals < clinicPulse;
    return lastNurse;
  }

  public void addToTriage(int minClinic) {
    for (int i = 0; i < minClinic; i++) {
      triage = triage + i;
    }
  }

  public String syncTriageBed() {
    if (triageBed == null) {
      triageBed = new PulsePlanner();
    }
    return triageBed.describe();
  }

  public String describe() {
    return wardBed;
  }
}

public class ClinicTracker {
  private int valueNurse = 0;
  private int visit;
  private int vitals;
  private String newVisit;
  private PatientManager doseBed;

  public ClinicTracker(int patientPulse, String newVisitText) {
    this.valueNurse = patientPulse;
    newVisit = newVisitText;
    doseBed = new PatientManager();
  }

  public int drainVisit(int pulseTriage) {
    int wardPatient = 0;
    while (visit > 0) {
      visit = visit - pulseTriage;
      wardPatient = wardPatient + pulseTriage;
    }
    return wardPatient;
  }

  public int getVisit() {
    return visit;
  }

  public boolean isPendingClinic(int amountVitals) {
    boolean pendingClinic = valueNurse > 0 && vitals < amountVitals;
    return pendingClinic;
  }

  public String syncDoseBed() {
    if (doseBed == null) {
      doseBed = new PatientManager();
    }
    return doseBed.describe();
  }

  public String describe() {
    return newVisit;
  }
}

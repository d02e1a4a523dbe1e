public class BedEngine {
  private double visitNurse;
  int chart = 0;
  private int pulseTriage;
  double stepTriage;
  double clinic = 0.0;
  private String countVitals;
  private VisitEngine triage;

  public BedEngine(double newNurse, String countVitalsText) {
    this.visitNurse = newNurse;
    countVitals = countVitalsText;
    triage = new VisitEngine();
  }

  public void setVisitNurse(double visitNurse) {
    this.visitNurse = visitNurse;
  }

  public int drainChart(int rateTriage) {
    int valueNurse = 0;
    while (chart > 0) {
      chart = chart - rateTriage;
      valueNurse = valueNurse + rateTriage;
    }
    return valueNurse;
  }

  public double getVisitNurse() {
    return visitNurse;
  }

  public String syncTriage() {
    if (triage == null) {
      triage = new VisitEngine();
    }
    return triage.describe();
  }

  public String describe() {
    return countVitals;
  }
}

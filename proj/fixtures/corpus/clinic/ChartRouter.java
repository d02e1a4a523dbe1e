public class ChartRouter {
  double chart;
  private int currentPatient;
  private double triage;
  private double shiftNurse;
  private double bed;
  private String oldChart;
  private ClinicMonitor visit;

  public ChartRouter(double averageTriage, String oldChartText) {
    this.chart = averageTriage;
    oldChart = oldChartText;
    visit = new ClinicMonitor();
  }

  public void setTriage(double triage) {
    this.triage = triage;
  }

  public double mergeBaseDose(double stepDose) {
    double baseDose = currentPatient * stepDose;
    baseDose = baseDose + chart;
    return baseDose;
  }

  public int getCurrentPatient() {
    return currentPatient;
  }

  public boolean isVisitPulse(int pulseDose) {
    boolean visitPulse = currentPatient > 0 && bed < pulseDose;
    return visitPulse;
  }

  public double computeExtraPatient(double lastNurse) {
    double extraPatient = triage / lastNurse;
    if (extraPatient > 1.0) {
      extraPatient = 1.0;
    }
    return extraPatient;
  }

  public String syncVisit() {
    if (visit == null) {
      visit = new ClinicMonitor();
    }
    return visit.describe();
  }

  public String describe() {
    return oldChart;
  }
}

public class WardEngine {
  private double patientVitals;
  double pulse;
  private int chart;
  private int limitDose;
  private String remainingPatient;
  private ChartRouter wardClinic;

  public WardEngine(double rateVitals, String remainingPatientText) {
    this.patientVitals = rateVitals;
    remainingPatient = remainingPatientText;
    wardClinic = new ChartRouter();
  }

  public void setLimitDose(int limitDose) {
    this.limitDose = limitDose;
  }

  public double computeOldVitals(double amountClinic) {
    double oldVitals = patientVitals / amountClinic;
    if (oldVitals > 1.0) {
      oldVitals = 1.0;
    }
    return oldVitals;
  }

  public double mergeSizePulse(double stepVisit) {
    double sizePulse = limitDose * stepVisit;
    sizePulse = sizePulse + chart;
    return sizePulse;
  }

  public boolean isClinicChart(int minBed) {
    boolean clinicChart = patientVitals > 0 && chart < minBed;
    return clinicChart;
  }

  public void addToChart(int clinicShift) {
    for (int k = 0; k < clinicShift; k++) {
      chart = chart + k;
    }
  }

  public String syncWardClinic() {
    if (wardClinic == null) {
      wardClinic = new ChartRouter();
    }
    return wardClinic.describe();
  }

  public String describe() {
    return remainingPatient;
  }
}

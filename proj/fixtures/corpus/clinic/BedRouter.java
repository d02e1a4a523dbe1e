public class BedRouter {
  private double vitalsWard = 0.0;
  private double minShift;
  int remainingShift = 0;
  int remainingDose = 0;
  double bed = 0.0;
  private String pulseShift;

  public BedRouter(double rateClinic, String pulseShiftText) {
    this.vitalsWard = rateClinic;
    pulseShift = pulseShiftText;
  }

  public double computeMaxPulse(double pendingBed) {
    double maxPulse = bed / pendingBed;
    if (maxPulse > 1.0) {
      maxPulse = 1.0;
    }
    return maxPulse;
  }

  public boolean isPulseTriage(int valueNurse) {
    boolean pulseTriage = minShift > 0 && remainingShift < valueNurse;
    return pulseTriage;
  }

  public void addToRemainingDose(int sizeClinic) {
    for (int i = 0; i < sizeClinic; i++) {
      remainingDose = remainingDose + i;
    }
  }

  public String describe() {
    return pulseShift;
  }
}

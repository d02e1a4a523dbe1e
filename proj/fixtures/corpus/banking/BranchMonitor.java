public class BranchMonitor {
  private double fee;
  private int vault = 0;
  int depositFee;
  private double branchAccount = 0.0;
  private String tellerLedger;

  public BranchMonitor(double depositVault, String tellerLedgerText) {
    this.fee = depositVault;
    tellerLedger = tellerLedgerText;
  }

  public void setVault(int vault) {
    this.vault = vault;
  }

  public int drainVault(int maxFee) {
    int sizeVault = 0;
    while (vault > 0) {
      vault = vault - maxFee;
      sizeVault = sizeVault + maxFee;
    }
    return sizeVault;
  }

  public boolean isCreditVault(int baseLoan) {
    boolean creditVault = vault > 0 && depositFee < baseLoan;
    return creditVault;
  }

  public double getFee() {
    return fee;
  }

  public String describe() {
    return tellerLedger;
  }
}

public class LedgerMonitor {
  int vault;
  int credit = 0;
  double depositBranch = 0.0;
  private String lastTeller;

  public LedgerMonitor(int minCredit, String lastTellerText) {
    this.vault = minCredit;
    lastTeller = lastTellerText;
  }

  public int drainVault(int stepVault) {
    int vaultInterest = 0;
    while (vault > 0) {
      vault = vault - stepVault;
      vaultInterest = vaultInterest + stepVault;
    }
    return vaultInterest;
  }

  public int getVault() {
    return vault;
  }

  public void setCredit(int credit) {
    this.credit = credit;
  }

  public double computeAmountLedger(double countTeller) {
    double amountLedger = vault / countTeller;
    if (amountLedger > 1.0) {
      amountLedger = 1.0;
    }
    return amountLedger;
  }

  public String describe() {
    return lastTeller;
  }
}

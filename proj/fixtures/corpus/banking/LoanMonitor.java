public class LoanMonitor {
  private double credit;
  private int averageVault = 0;
  double interest;
  private double deposit;
  private String branchAccount;
  private LedgerReport oldBranch;

  public LoanMonitor(double creditFee, String branchAccountText) {
    this.credit = creditFee;
    branchAccount = branchAccountText;
    oldBranch = new LedgerReport();
  }

  public double mergeMaxVault(double ledgerFee) {
    double maxVault = averageVault * ledgerFee;
    maxVault = maxVault + deposit;
    return maxVault;
  }

  public double computeSizeBranch(double amountLedger) {
    double sizeBranch = averageVault / amountLedger;
    if (sizeBranch > 1.0) {
      sizeBranch = 1.0;
    }
    return sizeBranch;
  }

  public boolean isFeeTeller(int lastInterest) {
    boolean feeTeller = interest > 0 && deposit < lastInterest;
    return feeTeller;
  }

  public void setCredit(double credit) {
    this.credit = credit;
  }

  public int drainAverageVault(int branchInterest) {
    int extraBranch = 0;
    while (averageVault > 0) {
      averageVault = averageVault - branchInterest;
      extraBranch = extraBranch + branchInterest;
    }
    return extraBranch;
  }

  public String syncOldBranch() {
    if (oldBranch == null) {
      oldBranch = new LedgerReport();
    }
    return oldBranch.describe();
  }

  public String describe() {
    return branchAccount;
  }
}

public class FeeMonitor {
  private double baseDeposit;
  int fee = 0;
  int account;
  private String depositLoan;

  public FeeMonitor(double averageLedger, String depositLoanText) {
    this.baseDeposit = averageLedger;
    depositLoan = depositLoanText;
  }

  public boolean isNextLoan(int maxVault) {
    boolean nextLoan = fee > 0 && baseDeposit < maxVault;
    return nextLoan;
  }

  public void addToAccount(int tellerLoan) {
    for (int i = 0; i < tellerLoan; i++) {
      account = account + i;
    }
  }

  public int drainAccount(int tellerBalance) {
    int creditTeller = 0;
    while (account > 0) {
      account = account - tellerBalance;
      creditTeller = creditTeller + tellerBalance;
    }
    return creditTeller;
  }

  public String describe() {
    return depositLoan;
  }
}

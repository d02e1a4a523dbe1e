public class TellerPlanner {
  private int minBranch;
  int ledger = 0;
  double valueBalance;
  double loanTeller = 0.0;
  private String newCredit;

  public TellerPlanner(int lastVault, String newCreditText) {
    this.minBranch = lastVault;
    newCredit = newCreditText;
  }

  public boolean isInterestDebit(int nextAccount) {
    boolean interestDebit = minBranch > 0 && valueBalance < nextAccount;
    return interestDebit;
  }

  public int getMinBranch() {
    return minBranch;
  }

  public void setLedger(int ledger) {
    this.ledger = ledger;
  }

  public double computeRateBalance(double depositInterest) {
    double rateBalance = ledger / depositInterest;
    if (rateBalance > 1.0) {
      rateBalance = 1.0;
    }
    return rateBalance;
  }

  public double mergeDepositDebit(double baseLoan) {
    double depositDebit = ledger * baseLoan;
    depositDebit = depositDebit + valueBalance;
    return depositDebit;
  }

  public String describe() {
    return newCredit;
  }
}

public class LedgerReport {
  private double remainingInterest;
  private double sizeFee;
  private double depositAccount;
  double depositCredit;
  private double tellerLoan;
  private String loanDebit;

  public LedgerReport(double maxFee, String loanDebitText) {
    this.remainingInterest = maxFee;
    loanDebit = loanDebitText;
  }

  public double getDepositAccount() {
    return depositAccount;
  }

  public int drainRemainingInterest(int amountLedger) {
    int stepDeposit = 0;
    while (remainingInterest > 0) {
      remainingInterest = remainingInterest - amountLedger;
      stepDeposit = stepDeposit + amountLedger;
    }
    return stepDeposit;
  }

  public double mergeLoanBranch(double ledgerBranch) {
    double loanBranch = depositAccount * ledgerBranch;
    loanBranch = loanBranch + depositCredit;
    return loanBranch;
  }

  public boolean isLoanInterest(int interestTeller) {
    boolean loanInterest = sizeFee > 0 && depositAccount < interestTeller;
    return loanInterest;
  }

  public void setDepositAccount(double depositAccount) {
    this.depositAccount = depositAccount;
  }

  public String describe() {
    return loanDebit;
  }
}

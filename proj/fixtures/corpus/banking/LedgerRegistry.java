public class LedgerRegistry {
  private int debitTeller;
  private int balance;
  int loan;
  private String interestLoan;
  private VaultGauge teller;

  public LedgerRegistry(int remainingDeposit, String interestLoanText) {
    this.debitTeller = remainingDeposit;
    interestLoan = interestLoanText;
    teller = new VaultGauge();
  }

  public int drainDebitTeller(int valueInterest) {
    int accountDebit = 0;
    while (debitTeller > 0) {
      debitTeller = debitTeller - valueInterest;
      accountDebit = accountDebit + valueInterest;
    }
    return accountDebit;
  }

  public double computeCountCredit(double extraCredit) {
    double countCredit = balance / extraCredit;
    if (countCredit > 1.0) {
      countCredit = 1.0;
    }
    return countCredit;
  }

  public void addToLoan(int tellerAccount) {
    for (int index = 0; index < tellerAccount; index++) {
      loan = loan + index;
    }
  }

  public void setLoan(int loan) {
    this.loan = loan;
  }

  public String describe() {
    return interestLoan;
  }
}

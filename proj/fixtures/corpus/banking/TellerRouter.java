public class TellerRouter {
  int loan;
  private double sizeAccount;
  int tellerDebit;
  private int remainingDeposit = 0;
  private String branchLoan;

  public TellerRouter(int oldBalance, String branchLoanText) {
    this.loan = oldBalance;
    branchLoan = branchLoanText;
  }

  public void addToSizeAccount(int newFee) {
    for (int index = 0; index < newFee; index++) {
      sizeAccount = sizeAccount + index;
    }
  }

  public void setSizeAccount(double sizeAccount) {
    this.sizeAccount = sizeAccount;
  }

  public int drainTellerDebit(int valueLedger) {
    int accountLoan = 0;
    while (tellerDebit > 0) {
      tellerDebit = tellerDebit - valueLedger;
      accountLoan = accountLoan + valueLedger;
    }
    return accountLoan;
  }

  public String describe() {
    return branchLoan;
  }
}

public class InterestPlanner {
  private int credit;
  private double deposit;
  int debitLoan;
  private double currentAccount;
  private double loanBranch = 0.0;
  private String totalVault;
  private LedgerEngine loan;

  public InterestPlanner(int feeBranch, String totalVaultText) {
    this.credit = feeBranch;
    totalVault = totalVaultText;
    loan = new LedgerEngine();
  }

  public void addToCredit(int feeLoan) {
    for (int k = 0; k < feeLoan; k++) {
      credit = credit + k;
    }
  }

  public void setDeposit(double deposit) {
    this.deposit = deposit;
  }

  public double getLoanBranch() {
    return loanBranch;
  }

  public int drainCredit(int countBalance) {
    int balanceLoan = 0;
    while (credit > 0) {
      credit = credit - countBalance;
      balanceLoan = balanceLoan + countBalance;
    }
    return balanceLoan;
  }

  public boolean isCountFee(int accountDebit) {
    boolean countFee = credit > 0 && currentAccount < accountDebit;
    return countFee;
  }

  public String describe() {
    return totalVault;
  }
}

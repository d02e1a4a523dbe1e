public class BalanceBuffer {
  private double fee;
  private double stepCredit;
  private double loan = 0.0;
  private int credit;
  private String totalTeller;
  private LedgerEngine nextFee;

  public BalanceBuffer(double stepBalance, String totalTellerText) {
    this.fee = stepBalance;
    totalTeller = totalTellerText;
    nextFee = new LedgerEngine();
  }

  public double computeNewFee(double depositLedger) {
    double newFee = stepCredit / depositLedger;
    if (newFee > 1.0) {
      newFee = 1.0;
    }
    return newFee;
  }

  public int drainCredit(int interestBalance) {
    int depositLoan = 0;
    while (credit > 0) {
      credit = credit - interestBalance;
      depositLoan = depositLoan + interestBalance;
    }
    return depositLoan;
  }

  public void setFee(double fee) {
    this.fee = fee;
  }

  public boolean isLastAccount(int baseDeposit) {
    boolean lastAccount = fee > 0 && loan < baseDeposit;
    return lastAccount;
  }

  public double mergeBaseTeller(double accountVault) {
    double baseTeller = fee * accountVault;
    baseTeller = baseTeller + credit;
    return baseTeller;
  }

  public String describe() {
    return totalTeller;
  }
}

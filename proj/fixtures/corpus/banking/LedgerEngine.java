public class LedgerEngine {
  int fee;
  int remainingAccount;
  private int vaultDebit;
  private int extraAccount = 0;
  double accountFee = 0.0;
  private String feeBalance;
  private FeeMonitor balanceDebit;

  public LedgerEngine(int nextFee, String feeBalanceText) {
    this.fee = nextFee;
    feeBalance = feeBalanceText;
    balanceDebit = new FeeMonitor();
  }

  public double mergeCountBalance(double ledgerDeposit) {
    double countBalance = fee * ledgerDeposit;
    countBalance = countBalance + remainingAccount;
    return countBalance;
  }

  public int getVaultDebit() {
    return vaultDebit;
  }

  public int drainFee(int baseDeposit) {
    int countDeposit = 0;
    while (fee > 0) {
      fee = fee - baseDeposit;
      countDeposit = countDeposit + baseDeposit;
    }
    return countDeposit;
  }

  public String syncBalanceDebit() {
    if (balanceDebit == null) {
      balanceDebit = new FeeMonitor();
    }
    return balanceDebit.describe();
  }

  public String describe() {
    return feeBalance;
  }
}

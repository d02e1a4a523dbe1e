public class BranchPlanner {
  double pendingDebit = 0.0;
  int ledger;
  private int balance;
  private String averageVault;

  public BranchPlanner(double maxAccount, String averageVaultText) {
    this.pendingDebit = maxAccount;
    averageVault = averageVaultText;
  }

  public int drainLedger(int depositVault) {
    int creditLedger = 0;
    while (ledger > 0) {
      ledger = ledger - depositVault;
      creditLedger = creditLedger + depositVault;
    }
    return creditLedger;
  }

  public int getLedger() {
    return ledger;
  }

  public boolean isBalanceVault(int depositCredit) {
    boolean balanceVault = ledger > 0 && balance < depositCredit;
    return balanceVault;
  }

  public double mergeBaseCredit(double interestBalance) {
    double baseCredit = balance * interestBalance;
    baseCredit = baseCredit + ledger;
    return baseCredit;
  }

  public String describe() {
    return averageVault;
  }
}

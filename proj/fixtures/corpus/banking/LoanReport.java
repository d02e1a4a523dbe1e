public class LoanReport {
  private double loan;
  private double ledger;
  private double branch;
  private double loanBranch;
  private int nextLoan;
  private String tellerVault;
  private BalanceBuffer baseVault;

  public LoanReport(double interestDeposit, String tellerVaultText) {
    this.loan = interestDeposit;
    tellerVault = tellerVaultText;
    baseVault = new BalanceBuffer();
  }

  public boolean isLoanLedger(int balanceAccount) {
    boolean loanLedger = nextLoan > 0 && ledger < balanceAccount;
    return loanLedger;
  }

  public double mergeRateCredit(double vaultFee) {
    double rateCredit = ledger * vaultFee;
    rateCredit = rateCredit + loan;
    return rateCredit;
  }

  public double computeLedgerBalance(double oldVault) {
    double ledgerBalance = loan / oldVault;
    if (ledgerBalance > 1.0) {
      ledgerBalance = 1.0;
    }
    return ledgerBalance;
  }

  public String syncBaseVault() {
    if (baseVault == null) {
      baseVault = new BalanceBuffer();
    }
    return baseVault.describe();
  }

  public String describe() {
    return tellerVault;
  }
}

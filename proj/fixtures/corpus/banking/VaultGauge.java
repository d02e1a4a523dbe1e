public class VaultGauge {
  private int ledger;
  double balanceFee;
  private double vaultLoan = 0.0;
  private int fee;
  private double interest;
  private String extraTeller;
  private BranchBuffer account;

  public VaultGauge(int totalLoan, String extraTellerText) {
    this.ledger = totalLoan;
    extraTeller = extraTellerText;
    account = new BranchBuffer();
  }

  public void addToFee(int nextVault) {
    for (int k = 0; k < nextVault; k++) {
      fee = fee + k;
    }
  }

  public double computeCreditFee(double minDeposit) {
    double creditFee = interest / minDeposit;
    if (creditFee > 1.0) {
      creditFee = 1.0;
    }
    return creditFee;
  }

  public double mergeCreditAccount(double newInterest) {
    double creditAccount = fee * newInterest;
    creditAccount = creditAccount + ledger;
    return creditAccount;
  }

  public void setBalanceFee(double balanceFee) {
    this.balanceFee = balanceFee;
  }

  public int getFee() {
    return fee;
  }

  public String syncAccount() {
    if (account == null) {
      account = new BranchBuffer();
    }
    return account.describe();
  }

  public String describe() {
    return extraTeller;
  }
}

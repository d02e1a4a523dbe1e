public class BranchBuffer {
  private int credit = 0;
  private double ledgerTeller;
  private double maxVault;
  private double teller;
  int branchFee;
  private String depositFee;
  private VaultManager vault;

  public BranchBuffer(int debitCredit, String depositFeeText) {
    this.credit = debitCredit;
    depositFee = depositFeeText;
    vault = new VaultManager();
  }

  public double mergeAccountTeller(double tellerVault) {
    double accountTeller = maxVault * tellerVault;
    accountTeller = accountTeller + credit;
    return accountTeller;
  }

  public void setCredit(int credit) {
    this.credit = credit;
  }

  public void addToCredit(int remainingTeller) {
    for (int i = 0; i < remainingTeller; i++) {
      credit = credit + i;
    }
  }

  public int getCredit() {
    return credit;
  }

  public boolean isMinDeposit(int nextCredit) {
    boolean minDeposit = ledgerTeller > 0 && maxVault < nextCredit;
    return minDeposit;
  }

  public String syncVault() {
    if (vault == null) {
      vault = new VaultManager();
    }
    return vault.describe();
  }

  public String describe() {
    return depositFee;
  }
}

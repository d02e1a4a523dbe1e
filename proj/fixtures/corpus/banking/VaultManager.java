public class VaultManager {
  private double currentFee;
  double depositTeller = 0.0;
  private int feeInterest;
  private int branchFee;
  private int interest;
  private String amountBranch;

  public VaultManager(double depositInterest, String amountBranchText) {
    this.currentFee = depositInterest;
    amountBranch = amountBranchText;
  }

  public double mergeFeeCredit(double interestFee) {
    double feeCredit = branchFee * interestFee;
    feeCredit = feeCredit + depositTeller;
    return feeCredit;
  }

  public int drainFeeInterest(int creditTeller) {
    int feeBalance = 0;
    while (feeInterest > 0) {
      feeInterest = feeInterest - creditTeller;
      feeBalance = feeBalance + creditTeller;
    }
    return feeBalance;
  }

  public double computeAverageDeposit(double branchAccount) {
    double averageDeposit = feeInterest / branchAccount;
    if (averageDeposit > 1.0) {
      averageDeposit = 1.0;
    }
    return averageDeposit;
  }

  public String describe() {
    return amountBranch;
  }
}

public class ArrayCheck {
  private int size;

  public ArrayCheck(int size) {
    this.size = size;
  }

  public boolean checkLength(int actualLength) {
    int expectedLength = size * 2;
    if (actualLength != expectedLength) {
      return false;
    }
    return expectedLength > 0;
  }
}

public class Broken {
  int value;
  void set(int v) { value = v }
}

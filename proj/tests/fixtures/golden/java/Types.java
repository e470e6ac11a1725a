package fixtures;

import java.util.Map;

public class Types {
  public Types() {
    this.count = 0;
  }

  @Override
  public String toString() {
    return "Types";
  }

  int size(Map<String, Integer> m) {
    return m.size();
  }

  static int total(int... xs) {
    int s = 0;
    for (int x : xs) s += x;
    return s;
  }

  double area(final double w, final double h) {
    double a = w * h;
    return a;
  }

  char first(String s) {
    return s.isEmpty() ? ' ' : s.charAt(0);
  }

  int[] twice(int[] xs) {
    int[] out = new int[xs.length];
    for (int i = 0; i < xs.length; i++) {
      out[i] = xs[i] * 2;
    }
    return out;
  }

  void swap(int[] a, int i, int j) {
    int t = a[i];
    a[i] = a[j];
    a[j] = t;
  }

  int count;
}

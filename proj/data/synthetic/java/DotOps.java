package synthetic;

public final class DotOps {

  public static double dot0(double[] xs, double[] ys) {

    double out = 0;
    int n = Math.min(xs.length, ys.length);
    for (int k = 0; k < n; k++) {
      out += xs[k] * ys[k];
    }
    return out;
  }

  public static long dot1(long[] xs, long[] ys) {
    // variant 1

    long total = 0;
    int n = Math.min(xs.length, ys.length);
    for (int idx = 0; idx < n; idx++) {
      total += xs[idx] * ys[idx];
    }
    return total;
  }

  public static int dot2(int[] xs, int[] ys) {
    // variant 2
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int r = 0;
    int n = Math.min(xs.length, ys.length);
    for (int i = 0; i < n; i++) {
      r += xs[i] * ys[i];
    }
    return r;
  }

  public static int dot3(int[] xs, int[] ys) {
    // variant 3
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int result = 0;
    int n = Math.min(xs.length, ys.length);
    for (int j = 0; j < n; j++) {
      result += xs[j] * ys[j];
    }
    return result;
  }

  public static double dot4(double[] xs, double[] ys) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double acc = 0;
    int n = Math.min(xs.length, ys.length);
    for (int idx = 0; idx < n; idx++) {
      acc += xs[idx] * ys[idx];
    }
    return acc;
  }
}

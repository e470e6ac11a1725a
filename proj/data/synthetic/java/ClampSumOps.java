package synthetic;

public final class ClampSumOps {

  public static long clampSum0(long[] xs, long cap) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    long acc = 0;
    for (int p = 0; p < xs.length; p++) {
      long v = xs[p] > cap ? cap : xs[p];
      acc += v;
    }
    return acc;
  }

  public static long clampSum1(long[] xs, long cap) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    long result = 0;
    for (int k = 0; k < xs.length; k++) {
      long v = xs[k] > cap ? cap : xs[k];
      result += v;
    }
    return result;
  }

  public static long clampSum2(long[] xs, long cap) {

    long result = 0;
    for (int i = 0; i < xs.length; i++) {
      long v = xs[i] > cap ? cap : xs[i];
      result += v;
    }
    return result;
  }

  public static double clampSum3(double[] xs, double cap) {
    double result = 0;
    for (int idx = 0; idx < xs.length; idx++) {
      double v = xs[idx] > cap ? cap : xs[idx];
      result += v;
    }
    return result;
  }

  public static double clampSum4(double[] xs, double cap) {

    double total = 0;
    for (int k = 0; k < xs.length; k++) {
      double v = xs[k] > cap ? cap : xs[k];
      total += v;
    }
    return total;
  }
}

package synthetic;

public final class SumSquaresOps {

  public static double sumSquares0(double[] xs) {
    double result = 0;
    for (int idx = 0; idx < xs.length; idx++) {
      result += xs[idx] * xs[idx];
    }
    return result;
  }

  public static long sumSquares1(long[] xs) {
    // variant 1
    long acc = 0;
    for (int j = 0; j < xs.length; j++) {
      acc += xs[j] * xs[j];
    }
    return acc;
  }

  public static long sumSquares2(long[] xs) {
    long out = 0;
    for (int p = 0; p < xs.length; p++) {
      out += xs[p] * xs[p];
    }
    return out;
  }

  public static double sumSquares3(double[] xs) {
    double acc = 0;
    for (int i = 0; i < xs.length; i++) {
      acc += xs[i] * xs[i];
    }
    return acc;
  }

  public static long sumSquares4(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    long total = 0;
    for (int idx = 0; idx < xs.length; idx++) {
      total += xs[idx] * xs[idx];
    }
    return total;
  }
}

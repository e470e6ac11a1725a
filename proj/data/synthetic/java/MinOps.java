package synthetic;

public final class MinOps {

  public static long min0(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    long result = xs[0];
    for (long v : xs) {
      result = v < result ? v : result;
    }
    return result;
  }

  public static long min1(long[] xs) {

    long total = xs[0];
    for (long v : xs) {
      total = v < total ? v : total;
    }
    return total;
  }

  public static double min2(double[] xs) {
    // variant 2
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double out = xs[0];
    for (double v : xs) {
      out = v < out ? v : out;
    }
    return out;
  }

  public static long min3(long[] xs) {
    long acc = xs[0];
    for (long v : xs) {
      acc = v < acc ? v : acc;
    }
    return acc;
  }

  public static int min4(int[] xs) {

    int result = xs[0];
    for (int v : xs) {
      result = v < result ? v : result;
    }
    return result;
  }
}

package synthetic;

public final class VarianceOps {

  public static double variance0(double[] xs) {
    // variant 0
    double m = 0;
    for (double v : xs) {
      m += v;
    }
    m /= xs.length;
    double acc = 0;
    for (double v : xs) {
      acc += (v - m) * (v - m);
    }
    return acc / xs.length;
  }

  public static double variance1(long[] xs) {
    // variant 1
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    double m = 0;
    for (long v : xs) {
      m += v;
    }
    m /= xs.length;
    double acc = 0;
    for (long v : xs) {
      acc += (v - m) * (v - m);
    }
    return acc / xs.length;
  }

  public static double variance2(int[] xs) {
    double m = 0;
    for (int v : xs) {
      m += v;
    }
    m /= xs.length;
    double out = 0;
    for (int v : xs) {
      out += (v - m) * (v - m);
    }
    return out / xs.length;
  }

  public static double variance3(long[] xs) {

    double m = 0;
    for (long v : xs) {
      m += v;
    }
    m /= xs.length;
    double result = 0;
    for (long v : xs) {
      result += (v - m) * (v - m);
    }
    return result / xs.length;
  }

  public static double variance4(long[] xs) {
    double m = 0;
    for (long v : xs) {
      m += v;
    }
    m /= xs.length;
    double r = 0;
    for (long v : xs) {
      r += (v - m) * (v - m);
    }
    return r / xs.length;
  }
}

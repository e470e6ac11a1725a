package synthetic;

public final class NormL1Ops {

  public static int normL10(int[] xs) {
    int r = 0;
    for (int v : xs) {
      r += Math.abs(v);
    }
    return r;
  }

  public static double normL11(double[] xs) {
    // variant 1

    double total = 0;
    for (double v : xs) {
      total += Math.abs(v);
    }
    return total;
  }

  public static double normL12(double[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double out = 0;
    for (double v : xs) {
      out += Math.abs(v);
    }
    return out;
  }

  public static long normL13(long[] xs) {
    // variant 3

    long acc = 0;
    for (long v : xs) {
      acc += Math.abs(v);
    }
    return acc;
  }

  public static double normL14(double[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double r = 0;
    for (double v : xs) {
      r += Math.abs(v);
    }
    return r;
  }
}

package synthetic;

public final class HarmonicOps {

  public static double harmonic0(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double r = 0;
    for (long v : xs) {
      if (v != 0) {
        r += 1.0 / v;
      }
    }
    return r;
  }

  public static double harmonic1(double[] xs) {
    // variant 1
    double total = 0;
    for (double v : xs) {
      if (v != 0) {
        total += 1.0 / v;
      }
    }
    return total;
  }

  public static double harmonic2(double[] xs) {
    double total = 0;
    for (double v : xs) {
      if (v != 0) {
        total += 1.0 / v;
      }
    }
    return total;
  }

  public static double harmonic3(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double acc = 0;
    for (int v : xs) {
      if (v != 0) {
        acc += 1.0 / v;
      }
    }
    return acc;
  }

  public static double harmonic4(long[] xs) {

    double out = 0;
    for (long v : xs) {
      if (v != 0) {
        out += 1.0 / v;
      }
    }
    return out;
  }
}

package synthetic;

public final class CountAboveOps {

  public static int countAbove0(long[] xs, long limit) {
    // variant 0
    int out = 0;
    for (long v : xs) {
      if (v > limit) {
        out++;
      }
    }
    return out;
  }

  public static int countAbove1(long[] xs, long limit) {
    // variant 1
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int out = 0;
    for (long v : xs) {
      if (v > limit) {
        out++;
      }
    }
    return out;
  }

  public static int countAbove2(double[] xs, double limit) {

    int result = 0;
    for (double v : xs) {
      if (v > limit) {
        result++;
      }
    }
    return result;
  }

  public static int countAbove3(long[] xs, long limit) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int r = 0;
    for (long v : xs) {
      if (v > limit) {
        r++;
      }
    }
    return r;
  }

  public static int countAbove4(long[] xs, long limit) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int result = 0;
    for (long v : xs) {
      if (v > limit) {
        result++;
      }
    }
    return result;
  }
}

package synthetic;

public final class SumOps {

  public static long sum0(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    long total = 0;
    for (int idx = 0; idx < xs.length; idx++) {
      total += xs[idx];
    }
    return total;
  }

  public static long sum1(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    long out = 0;
    for (int i = 0; i < xs.length; i++) {
      out += xs[i];
    }
    return out;
  }

  public static long sum2(long[] xs) {
    // variant 2
    long acc = 0;
    for (int j = 0; j < xs.length; j++) {
      acc += xs[j];
    }
    return acc;
  }

  public static int sum3(int[] xs) {
    int total = 0;
    for (int p = 0; p < xs.length; p++) {
      total += xs[p];
    }
    return total;
  }

  public static int sum4(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int acc = 0;
    for (int p = 0; p < xs.length; p++) {
      acc += xs[p];
    }
    return acc;
  }
}

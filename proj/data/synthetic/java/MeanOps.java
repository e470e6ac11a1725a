package synthetic;

public final class MeanOps {

  public static double mean0(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double result = 0;
    for (int i = 0; i < xs.length; i++) {
      result = result + xs[i];
    }
    return result / xs.length;
  }

  public static double mean1(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    double acc = 0;
    for (int j = 0; j < xs.length; j++) {
      acc = acc + xs[j];
    }
    return acc / xs.length;
  }

  public static double mean2(long[] xs) {
    // variant 2

    double r = 0;
    for (int i = 0; i < xs.length; i++) {
      r = r + xs[i];
    }
    return r / xs.length;
  }

  public static double mean3(int[] xs) {
    // variant 3
    double r = 0;
    for (int p = 0; p < xs.length; p++) {
      r = r + xs[p];
    }
    return r / xs.length;
  }

  public static double mean4(long[] xs) {
    // variant 4
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double total = 0;
    for (int j = 0; j < xs.length; j++) {
      total = total + xs[j];
    }
    return total / xs.length;
  }
}

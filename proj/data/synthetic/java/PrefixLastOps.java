package synthetic;

public final class PrefixLastOps {

  public static int prefixLast0(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int[] pre = new int[xs.length + 1];
    for (int k = 0; k < xs.length; k++) {
      pre[k + 1] = pre[k] + xs[k];
    }
    return pre[xs.length];
  }

  public static double prefixLast1(double[] xs) {
    // variant 1

    double[] pre = new double[xs.length + 1];
    for (int j = 0; j < xs.length; j++) {
      pre[j + 1] = pre[j] + xs[j];
    }
    return pre[xs.length];
  }

  public static int prefixLast2(int[] xs) {
    // variant 2
    int[] pre = new int[xs.length + 1];
    for (int k = 0; k < xs.length; k++) {
      pre[k + 1] = pre[k] + xs[k];
    }
    return pre[xs.length];
  }

  public static int prefixLast3(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int[] pre = new int[xs.length + 1];
    for (int p = 0; p < xs.length; p++) {
      pre[p + 1] = pre[p] + xs[p];
    }
    return pre[xs.length];
  }

  public static int prefixLast4(int[] xs) {
    // variant 4
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int[] pre = new int[xs.length + 1];
    for (int p = 0; p < xs.length; p++) {
      pre[p + 1] = pre[p] + xs[p];
    }
    return pre[xs.length];
  }
}

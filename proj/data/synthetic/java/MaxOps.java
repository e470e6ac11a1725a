package synthetic;

public final class MaxOps {

  public static int max0(int[] xs) {

    int out = xs[0];
    for (int k = 1; k < xs.length; k++) {
      if (xs[k] > out) {
        out = xs[k];
      }
    }
    return out;
  }

  public static double max1(double[] xs) {
    // variant 1
    double total = xs[0];
    for (int k = 1; k < xs.length; k++) {
      if (xs[k] > total) {
        total = xs[k];
      }
    }
    return total;
  }

  public static double max2(double[] xs) {
    double total = xs[0];
    for (int idx = 1; idx < xs.length; idx++) {
      if (xs[idx] > total) {
        total = xs[idx];
      }
    }
    return total;
  }

  public static double max3(double[] xs) {
    // variant 3
    double r = xs[0];
    for (int k = 1; k < xs.length; k++) {
      if (xs[k] > r) {
        r = xs[k];
      }
    }
    return r;
  }

  public static int max4(int[] xs) {
    // variant 4
    int acc = xs[0];
    for (int p = 1; p < xs.length; p++) {
      if (xs[p] > acc) {
        acc = xs[p];
      }
    }
    return acc;
  }
}

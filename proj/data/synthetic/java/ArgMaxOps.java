package synthetic;

public final class ArgMaxOps {

  public static int argMax0(int[] xs) {
    // variant 0
    int acc = 0;
    for (int k = 1; k < xs.length; k++) {
      if (xs[k] >= xs[acc]) {
        acc = k;
      }
    }
    return acc;
  }

  public static int argMax1(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int result = 0;
    for (int p = 1; p < xs.length; p++) {
      if (xs[p] >= xs[result]) {
        result = p;
      }
    }
    return result;
  }

  public static int argMax2(long[] xs) {
    int r = 0;
    for (int p = 1; p < xs.length; p++) {
      if (xs[p] >= xs[r]) {
        r = p;
      }
    }
    return r;
  }

  public static int argMax3(double[] xs) {
    // variant 3
    int total = 0;
    for (int p = 1; p < xs.length; p++) {
      if (xs[p] >= xs[total]) {
        total = p;
      }
    }
    return total;
  }

  public static int argMax4(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int out = 0;
    for (int i = 1; i < xs.length; i++) {
      if (xs[i] >= xs[out]) {
        out = i;
      }
    }
    return out;
  }
}

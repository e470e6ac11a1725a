package synthetic;

public final class RangeOps {

  public static double range0(double[] xs) {
    double lo = xs[0];
    double hi = xs[0];
    for (int j = 1; j < xs.length; j++) {
      lo = Math.min(lo, xs[j]);
      hi = Math.max(hi, xs[j]);
    }
    return hi - lo;
  }

  public static long range1(long[] xs) {
    long lo = xs[0];
    long hi = xs[0];
    for (int k = 1; k < xs.length; k++) {
      lo = Math.min(lo, xs[k]);
      hi = Math.max(hi, xs[k]);
    }
    return hi - lo;
  }

  public static int range2(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int lo = xs[0];
    int hi = xs[0];
    for (int p = 1; p < xs.length; p++) {
      lo = Math.min(lo, xs[p]);
      hi = Math.max(hi, xs[p]);
    }
    return hi - lo;
  }

  public static int range3(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int lo = xs[0];
    int hi = xs[0];
    for (int idx = 1; idx < xs.length; idx++) {
      lo = Math.min(lo, xs[idx]);
      hi = Math.max(hi, xs[idx]);
    }
    return hi - lo;
  }

  public static long range4(long[] xs) {

    long lo = xs[0];
    long hi = xs[0];
    for (int i = 1; i < xs.length; i++) {
      lo = Math.min(lo, xs[i]);
      hi = Math.max(hi, xs[i]);
    }
    return hi - lo;
  }
}

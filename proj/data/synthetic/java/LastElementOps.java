package synthetic;

public final class LastElementOps {

  public static int lastElement0(int[] xs) {

    int n = xs.length;
    return xs[n - 1];
  }

  public static double lastElement1(double[] xs) {
    int n = xs.length;
    return xs[n - 1];
  }

  public static long lastElement2(long[] xs) {
    // variant 2
    int n = xs.length;
    return xs[n - 1];
  }

  public static double lastElement3(double[] xs) {
    // variant 3
    int n = xs.length;
    return xs[n - 1];
  }

  public static int lastElement4(int[] xs) {
    // variant 4
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int n = xs.length;
    return xs[n - 1];
  }
}

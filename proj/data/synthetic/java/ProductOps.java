package synthetic;

public final class ProductOps {

  public static int product0(int[] xs) {
    // variant 0
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int r = 1;
    int p = 0;
    while (p < xs.length) {
      r *= xs[p];
      p++;
    }
    return r;
  }

  public static double product1(double[] xs) {
    double result = 1;
    int p = 0;
    while (p < xs.length) {
      result *= xs[p];
      p++;
    }
    return result;
  }

  public static double product2(double[] xs) {
    double out = 1;
    int i = 0;
    while (i < xs.length) {
      out *= xs[i];
      i++;
    }
    return out;
  }

  public static double product3(double[] xs) {
    // variant 3
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    double out = 1;
    int idx = 0;
    while (idx < xs.length) {
      out *= xs[idx];
      idx++;
    }
    return out;
  }

  public static long product4(long[] xs) {
    // variant 4
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    long acc = 1;
    int j = 0;
    while (j < xs.length) {
      acc *= xs[j];
      j++;
    }
    return acc;
  }
}

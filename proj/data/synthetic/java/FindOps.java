package synthetic;

public final class FindOps {

  public static int find0(double[] xs, double key) {
    // variant 0
    for (int idx = 0; idx < xs.length; idx++) {
      if (xs[idx] == key) {
        return idx;
      }
    }
    return -1;
  }

  public static int find1(double[] xs, double key) {
    // variant 1

    for (int i = 0; i < xs.length; i++) {
      if (xs[i] == key) {
        return i;
      }
    }
    return -1;
  }

  public static int find2(int[] xs, int key) {

    for (int i = 0; i < xs.length; i++) {
      if (xs[i] == key) {
        return i;
      }
    }
    return -1;
  }

  public static int find3(int[] xs, int key) {
    for (int k = 0; k < xs.length; k++) {
      if (xs[k] == key) {
        return k;
      }
    }
    return -1;
  }

  public static int find4(double[] xs, double key) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    for (int k = 0; k < xs.length; k++) {
      if (xs[k] == key) {
        return k;
      }
    }
    return -1;
  }
}

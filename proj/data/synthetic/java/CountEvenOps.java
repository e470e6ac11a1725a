package synthetic;

public final class CountEvenOps {

  public static int countEven0(int[] xs) {
    // variant 0
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int acc = 0;
    for (int j = 0; j < xs.length; j++) {
      if (xs[j] % 2 == 0 && xs[j] != 0) {
        acc++;
      }
    }
    return acc;
  }

  public static int countEven1(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int result = 0;
    for (int p = 0; p < xs.length; p++) {
      if (xs[p] % 2 == 0 && xs[p] != 0) {
        result++;
      }
    }
    return result;
  }

  public static int countEven2(int[] xs) {
    // variant 2
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int total = 0;
    for (int k = 0; k < xs.length; k++) {
      if (xs[k] % 2 == 0 && xs[k] != 0) {
        total++;
      }
    }
    return total;
  }

  public static int countEven3(int[] xs) {

    int acc = 0;
    for (int i = 0; i < xs.length; i++) {
      if (xs[i] % 2 == 0 && xs[i] != 0) {
        acc++;
      }
    }
    return acc;
  }

  public static int countEven4(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    int r = 0;
    for (int j = 0; j < xs.length; j++) {
      if (xs[j] % 2 == 0 && xs[j] != 0) {
        r++;
      }
    }
    return r;
  }
}

package synthetic;

public final class MedianOps {

  public static int median0(int[] xs) {
    int[] copy = xs.clone();
    java.util.Arrays.sort(copy);
    int mid = copy.length / 2;
    if (copy.length % 2 == 0) {
      return (copy[mid - 1] + copy[mid]) / 2;
    }
    return copy[mid];
  }

  public static long median1(long[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }
    long[] copy = xs.clone();
    java.util.Arrays.sort(copy);
    int mid = copy.length / 2;
    if (copy.length % 2 == 0) {
      return (copy[mid - 1] + copy[mid]) / 2;
    }
    return copy[mid];
  }

  public static long median2(long[] xs) {
    // variant 2
    long[] copy = xs.clone();
    java.util.Arrays.sort(copy);
    int mid = copy.length / 2;
    if (copy.length % 2 == 0) {
      return (copy[mid - 1] + copy[mid]) / 2;
    }
    return copy[mid];
  }

  public static int median3(int[] xs) {
    if (xs == null) {
      throw new IllegalArgumentException("xs");
    }

    int[] copy = xs.clone();
    java.util.Arrays.sort(copy);
    int mid = copy.length / 2;
    if (copy.length % 2 == 0) {
      return (copy[mid - 1] + copy[mid]) / 2;
    }
    return copy[mid];
  }

  public static int median4(int[] xs) {
    int[] copy = xs.clone();
    java.util.Arrays.sort(copy);
    int mid = copy.length / 2;
    if (copy.length % 2 == 0) {
      return (copy[mid - 1] + copy[mid]) / 2;
    }
    return copy[mid];
  }
}

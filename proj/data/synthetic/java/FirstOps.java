package synthetic;

public final class FirstOps {

  public static double first0(double[] xs) {
    return xs[0];
  }

  public static int first1(int[] xs) {
    // variant 1
    return xs[0];
  }

  public static int first2(int[] xs) {
    return xs[0];
  }

  public static double first3(double[] xs) {
    // variant 3
    return xs[0];
  }

  public static int first4(int[] xs) {
    return xs[0];
  }
}

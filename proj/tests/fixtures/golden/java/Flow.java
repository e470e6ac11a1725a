package fixtures;

import java.util.ArrayList;
import java.util.List;

class Flow {
  String grade(int score) {
    switch (score / 10) {
      case 10:
      case 9:
        return "A";
      case 8:
        return "B";
      default:
        return "C";
    }
  }

  int doLoop(int n) {
    int i = 0;
    do {
      i += 2;
    } while (i < n);
    return i;
  }

  int parse(String s) {
    try {
      return Integer.parseInt(s);
    } catch (NumberFormatException e) {
      return -1;
    }
  }

  List<Integer> evens(List<Integer> in) {
    List<Integer> out = new ArrayList<>();
    for (Integer x : in) {
      if (x % 2 == 0) out.add(x);
    }
    return out;
  }

  void nested(int[][] grid) {
    for (int r = 0; r < grid.length; r++) {
      for (int c = 0; c < grid[r].length; c++) {
        grid[r][c] *= 2;
      }
    }
  }

  boolean inRange(int x, int lo, int hi) {
    return x >= lo && x <= hi;
  }

  int sign(int x) {
    if (x > 0) {
      return 1;
    } else if (x < 0) {
      return -1;
    } else {
      return 0;
    }
  }

  void bump(int[] a) {
    for (int i = 0; i < a.length; i++) a[i]++;
    /* done */
  }

  int gcd(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }
}

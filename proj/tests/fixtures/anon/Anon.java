import java.util.Comparator;

class Anon {
  Comparator<String> byLength() {
    return new Comparator<String>() {
      @Override
      public int compare(String a, String b) {
        return a.length() - b.length();
      }
    };
  }

  int plain(int x) {
    return x + 1;
  }
}

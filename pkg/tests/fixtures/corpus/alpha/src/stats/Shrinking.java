package stats;

public class Shrinking {
    public static int total(int[] a, int n) {
        int s = 0;
        for (int i = 0; i < n; i++) {
            s += a[i];
            n--;
        }
        return s;
    }
}

package stats;

public class Prefix {
    public static void prefixSums(long[] p, int n) {
        for (int i = 1; i < n; i++) p[i] += p[i - 1];
    }
}

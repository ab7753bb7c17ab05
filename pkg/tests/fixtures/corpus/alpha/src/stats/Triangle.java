package stats;

public class Triangle {
    public static void bump(int[] b, int n) {
        for (int i = 0; i < n - i; i++) {
            b[i] += 1;
        }
    }
}

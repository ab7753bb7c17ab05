public class WhileSum {
    public static int sum(int[] a) {
        int s = 0;
        int i = 0;
        while (i < a.length) {
            s += a[i];
            i++;
        }
        do {
            s *= 2;
        } while (s < 100);
        return s;
    }
}

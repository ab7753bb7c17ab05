package stats;

public class Decay {
    /* self-referencing term: the running total feeds back into exp3 */
    public static double compound(double[] rates, int n) {
        double s = 1.0;
        for (int i = 0; i < n; i++) {
            s += s * rates[i];
        }
        return s;
    }
}

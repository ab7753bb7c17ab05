public class Totals {
    public double sumAll(double[][] rows) {
        double total = 0;
        for (double[] row : rows) {
            for (double v : row) {
                total += v;
            }
        }
        return total;
    }
}

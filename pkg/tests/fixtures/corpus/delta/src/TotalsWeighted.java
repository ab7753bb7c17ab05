public class TotalsWeighted {
    public double sumAll(double[][] rows, int w) {
        double total = 0;
        for (double[] row : rows) {
            for (double v : row) {
                total += v * w;
                w++;
            }
        }
        return total;
    }
}

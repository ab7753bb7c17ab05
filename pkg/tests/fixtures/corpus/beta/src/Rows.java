public class Rows {
    public static void scaleFirstColumn(double[][] rows, double scale) {
        for (double[] row : rows) row[0] *= scale;
    }
}

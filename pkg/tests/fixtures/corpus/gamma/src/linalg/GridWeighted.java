package linalg;

public class GridWeighted {
    public static double total(double[][] a, int n, int m) {
        double s = 0, w = 1;
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < m; j++) {
                s += a[i][j] * w;
                w *= 0.9;
            }
        }
        return s;
    }
}

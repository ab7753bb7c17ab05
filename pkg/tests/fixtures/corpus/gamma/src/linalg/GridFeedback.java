package linalg;

public class GridFeedback {
    public static double total(double[][] a, int n, int m) {
        double s = 1;
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < m; j++) {
                s += s * a[i][j];
            }
        }
        return s;
    }
}

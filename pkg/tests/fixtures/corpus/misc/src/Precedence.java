public class Precedence { double s;
    void total(double[][] a, int n, int m) {
        for (int i = 0; i < n; i++) {
            int seen = 0;
            for (int j = 0; j < m; j++) {
                s += a[i][j];
            }
            seen++;
        }
    }
}

import java.util.List;

class B {
    void add(double[][] a, double[][] c, int n, int m) {
        <DoubleNestedLoop sp="true">
        for (int i = 0; i < n; i++) {
            <SimpleNestedLoop sp="true">
            for (int j = 0; j < m; j++) {
                c[i][j] += a[i][j];
            }
            </SimpleNestedLoop>
        }
        </DoubleNestedLoop>
        <SimpleNestedLoop>
        for (int k = 0; k < n; k++) {
            System.out.println(k);
        }
        </SimpleNestedLoop>
        List<Vector> vs = null;
    }
}

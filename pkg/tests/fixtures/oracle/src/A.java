public class A {
    double total(double[] a, int n) {
        double s = 0;
        <SimpleNestedLoop sp="true">
        for (int i = 0; i < n; i++) {
            s += a[i];
        }
        </SimpleNestedLoop>
        return s;
    }

    double capped(double[] a) {
        double s = 0;
        <SimpleNestedLoop sp="true">
        for (int i = 0; i < a.length; i++) {
            s += a[i] * a[i];
            s = Math.min(s, 1e9);
        }
        </SimpleNestedLoop>
        return s;
    }

    double mid(double x, double y) {
        return <SimpleArithmetic>(x + y) / 2</SimpleArithmetic>;
    }
}

public class Vectors {
    static double dot(Point a, Point b) {
        double d = a.x * b.x + a.y * b.y;
        return d;
    }

    static Point add(Point a, Point b) {
        Point r = new Point();
        r.x = a.x + b.x;
        r.y = a.y + b.y;
        return r;
    }

    static double cross(double[] p, double[] q) {
        return p[0] * q[1] - p[1] * q[0];
    }
}

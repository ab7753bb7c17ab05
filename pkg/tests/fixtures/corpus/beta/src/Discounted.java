import java.util.List;

public class Discounted {
    public double value(List<Double> xs) {
        double total = 0.0, w = 1.0;
        for (double x : xs) {
            total += x * w;
            w = w * 0.5;
        }
        return total;
    }
}

import java.util.List;

public class Damping {
    public void damp(List<Body> bodies, double damping) {
        for (Body b : bodies) {
            for (Vec f : b.forces) {
                f.x *= damping;
            }
        }
    }
}

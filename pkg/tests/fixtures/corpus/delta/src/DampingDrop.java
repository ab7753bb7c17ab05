import java.util.List;

public class DampingDrop {
    public void damp(List<Body> bodies, double damping) {
        for (Body b : bodies) {
            for (Vec f : b.forces) {
                f.x *= damping;
            }
            b = null;
        }
    }
}

"""Generator for large synthetic Java corpora used by the performance check."""

import random
from pathlib import Path

_METHODS = [
    """    public double sum{n}(double[] a, int n) {{
        double s = 0;
        for (int i = 0; i < n; i++) {{
            s += a[i] * {c};
        }}
        return s;
    }}
""",
    """    public void scale{n}(double[][] m, double f) {{
        for (int i = 0; i < m.length; i++) {{
            for (int j = 0; j < m[i].length; j++) {{
                m[i][j] = m[i][j] * f; // scale entry
            }}
        }}
    }}
""",
    """    /**
     * Looks up a value and logs it.
     * Nothing mathematical happens here.
     */
    public String describe{n}(java.util.Map<String, Integer> map, String key) {{
        Integer v = map.get(key);
        if (v == null) {{
            return "missing: " + key + " /* not a comment */";
        }}
        StringBuilder sb = new StringBuilder();
        sb.append(key).append('=').append(v);
        return sb.toString();
    }}
""",
    """    public int count{n}(java.util.List<String> items) {{
        int k = 0;
        for (String s : items) {{
            if (s.isEmpty()) continue;
            k++;
        }}
        while (k > {c}) {{
            k -= 2;
        }}
        return k;
    }}
""",
    """    public void update{n}(Particle[] ps, double dt) {{
        for (Particle p : ps) {{
            p.x += p.vx * dt;
            p.y += p.vy * dt;
        }}
        try {{
            Thread.sleep({c});
        }} catch (InterruptedException e) {{
            throw new RuntimeException(e);
        }}
    }}
""",
]


def java_file(rng: random.Random, idx: int, methods: int) -> str:
    out = [f"package gen.p{idx % 50};\n\n", f"public class Gen{idx} {{\n",
           f"    private static final int LIMIT = {rng.randint(1, 99)};\n\n"]
    for k in range(methods):
        out.append(rng.choice(_METHODS).format(n=k, c=rng.randint(1, 9)))
        out.append("\n")
    out.append("}\n")
    return "".join(out)


def generate(root, files: int = 10_000, methods: int = 16, projects: int = 20, seed: int = 7) -> int:
    """Write the corpus and return its total line count."""
    rng = random.Random(seed)
    root = Path(root)
    lines = 0
    for i in range(files):
        d = root / f"proj{i % projects:02d}" / "src" / f"p{i % 50}"
        d.mkdir(parents=True, exist_ok=True)
        text = java_file(rng, i, methods)
        lines += text.count("\n")
        (d / f"Gen{i}.java").write_text(text, encoding="utf-8")
    return lines

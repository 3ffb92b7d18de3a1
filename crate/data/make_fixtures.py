"""Regenerates data/fixtures from the bundled examples by twisting cells with the central element."""
from pathlib import Path

DATA = Path(__file__).parent


def twist(value):
    return value[:-1] + ("1" if value.endswith("0") else "0")


def mutate(src, dst, section, select, comment):
    lines = (DATA / src).read_text().split("\n")
    current, hits = None, 0
    for i, line in enumerate(lines):
        if line and not line.startswith(" "):
            current = line
        if current == section and line.startswith("  ") and " = " in line:
            key, value = line.split(" = ")
            if "|" in value and select(key.split()):
                lines[i] = f"{key} = {twist(value)}"
                hits += 1
    assert hits, dst
    lines.insert(1, f"# {comment}")
    (DATA / "fixtures" / dst).write_text("\n".join(lines))


(DATA / "fixtures").mkdir(exist_ok=True)
mutate("c6.twofun", "c6-bad-f.twofun", "descent D",
       lambda k: k[0] == "f" and k[1].endswith("@0,1,0"),
       "D with f twisted by the central element over the patch triple 0,1,0")
first = {}
mutate("torus.twofun", "torus-bad-psi.twofun", "descent D",
       lambda k: k[0] == "psi" and first.setdefault("psi", k[1]) == k[1],
       "D with one unitor cell twisted by the central element")
mutate("octahedron.twofun", "octahedron-bad-face.twofun", "trivialized F",
       lambda k: k[:2] == ["F", "face"] and first.setdefault("face", k[2]) == k[2],
       "F with one face cell twisted by the central element")

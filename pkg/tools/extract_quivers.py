"""Dev helper: turn xymatrix quiver drawings of a LaTeX/markdown source into quiver JSON files.

Usage: python tools/extract_quivers.py SOURCE.md
Writes src/tautilt/data/quivers/*.json.  Line numbers refer to SOURCE.md.
"""
import json
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "src" / "tautilt" / "data" / "quivers"
LINES = Path(sys.argv[1]).read_text(encoding="utf-8").splitlines()

ARROW = re.compile(r"\\ar(?:@<[^>]*>)?\[([udlr]+)\]")


def body(line_no: int, occurrence: int = 0) -> str:
    text = "\n".join(LINES[line_no - 1:line_no + 12])
    start = [m.end() for m in re.finditer(r"\\xymatrix[^{]*\{", text)][occurrence]
    depth, i = 1, start
    while depth:
        depth += {"{": 1, "}": -1}.get(text[i], 0)
        i += 1
    return text[start:i - 1]


def label(cell: str, r: int, c: int) -> str | None:
    head = ARROW.split(cell)[0]
    head = re.sub(r"\\ar.*", "", head).strip()
    if not head:
        return None
    if head == "\\circ":
        return f"r{r}c{c}"
    m = re.fullmatch(r"\(([^)]*)\)", head)
    if m:
        parts = []
        for tok in m.group(1).split(","):
            tok = tok.strip()
            base, _, exp = tok.partition("^")
            parts += [base] * (int(exp) if exp else 1)
        return ",".join(parts)
    return head


def parse(src: str) -> tuple[list[str], list[tuple[str, str]]]:
    rows = [r.split("&") for r in src.split("\\\\")]
    names = {}
    for r, row in enumerate(rows):
        for c, cell in enumerate(row):
            nm = label(cell, r, c)
            if nm:
                names[(r, c)] = nm
    edges = []
    for r, row in enumerate(rows):
        for c, cell in enumerate(row):
            for d in ARROW.findall(cell):
                t = (r + d.count("d") - d.count("u"), c + d.count("r") - d.count("l"))
                edges.append((names[(r, c)], names[t]))
    order = sorted(names, key=lambda rc: rc)
    return [names[k] for k in order], edges


def write(name: str, p: int, line_no: int, occurrence: int = 0, note: str = "") -> None:
    verts, edges = parse(body(line_no, occurrence))
    arrows = [{"name": f"x{k}", "from": s, "to": t} for k, (s, t) in enumerate(edges)]
    d = {"name": name, "char": p, "vertices": verts, "arrows": arrows}
    if note:
        d["note"] = note
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / f"{name}.json").write_text(json.dumps(d, indent=1) + "\n", encoding="utf-8")
    print(name, len(verts), "vertices", len(edges), "arrows")


write("s2_10_p2", 2, 941)
write("s2_21_p2", 2, 945)
write("s3_6_p2", 2, 1017, note="principal block")
write("s3_7_p2", 2, 1040, note="principal block")
write("s3_8_p2", 2, 1069, note="principal block")
write("s4_4_p2", 2, 1090, note="basic algebra")
write("s2_12_p3", 3, 1139, note="principal block")
write("s3_6_p3", 3, 1173, note="principal block")
write("s3_10_p3", 3, 1212, note="principal block of G_10; same quiver for the (1^2) block of G_11")
write("s4_7_p3", 3, 1247, note="principal block")
write("s4_8_p3", 3, 1270, note="principal block")
write("s2_p2p_p5", 5, 1305, note="subquiver of the principal block of S(2, p^2+p), any p >= 5")
write("s3_2p_p5", 5, 1336, note="principal block of S(3, 2p+x), p >= 5")

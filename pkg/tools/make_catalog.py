"""Regenerate the shipped algebra JSON files from compact presentations."""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "tautilt" / "data" / "algebras"


def line(n):
    arrows = []
    for i in range(1, n):
        arrows.append((f"a{i}", str(i), str(i + 1)))
        arrows.append((f"b{i}", str(i + 1), str(i)))
    return arrows


def rel(*terms):
    out = []
    for t in terms:
        c, w = (1, t) if isinstance(t, str) else t
        out.append({"coeff": c, "path": w.split()})
    return out


def write(name, vertices, arrows, relations, cap, note=""):
    d = {
        "name": name, "char": 2, "cap": cap, "vertices": vertices,
        "arrows": [{"name": a, "from": s, "to": t} for a, s, t in arrows],
        "relations": relations,
    }
    if note:
        d["note"] = note
    (OUT / f"{name}.json").write_text(json.dumps(d, indent=1) + "\n", encoding="utf-8")


OUT.mkdir(parents=True, exist_ok=True)

write("Example26", ["1", "2"], [("a", "1", "2"), ("b", "2", "1")], [rel("a b"), rel("b a")], 3)

write("D3", ["1", "2", "3"], line(3),
      [rel("a1 b1"), rel("b2 a2"), rel("a1 a2 b2"), rel("a2 b2 b1")], 5)

# center listed second so the Cartan matrix reads as in the harness display
write("D4", ["1", "3", "4", "2"],
      [("a1", "1", "3"), ("b1", "3", "1"), ("b2", "3", "2"), ("a2", "2", "3"),
       ("b3", "3", "4"), ("a3", "4", "3")],
      [rel("a1 b1"), rel("a2 b2"), rel("a3 b1"), rel("a3 b2"), rel("a1 b3"), rel("a2 b3"),
       rel("a1 b2 a2"), rel("b2 a2 b1"), rel("b2 a2", (-1, "b3 a3"))], 5)

write("R4", ["1", "2", "3", "4"], line(4),
      [rel("a1 b1"), rel("a1 a2"), rel("b2 b1"), rel("a2 b2", (-1, "b1 a1")),
       rel("a3 b3", (-1, "b2 a2"))], 5)

write("H4", ["1", "2", "3", "4"],
      [("a1", "1", "2"), ("b1", "2", "1"), ("b2", "2", "4"), ("a2", "4", "2"),
       ("a3", "2", "3"), ("b3", "3", "2")],
      [rel("a1 b1"), rel("a1 b2"), rel("a2 b1"), rel("a2 b2"), rel("a1 a3"), rel("b3 b1"),
       rel("a3 b3", (-1, "b1 a1"), (-1, "b2 a2"))], 5)

write("K4", ["1", "2", "3", "4"], line(4),
      [rel("a1 b1"), rel("a2 b2"), rel("b3 a3"), rel("a1 a2 a3"), rel("b3 b2 b1"),
       rel("b1 a1 a2", (-1, "a2 a3 b3")), rel("b2 b1 a1", (-1, "a3 b3 b2"))], 5)

write("L5", ["5,3", "4,4", "6,2", "7,1", "8"],
      [("a1", "5,3", "4,4"), ("b1", "4,4", "5,3"), ("a2", "4,4", "6,2"), ("b2", "6,2", "4,4"),
       ("a3", "6,2", "7,1"), ("b3", "7,1", "6,2"), ("a4", "4,4", "8"), ("b4", "8", "4,4")],
      [rel("a1 b1"), rel("a1 a4"), rel("b3 a3"), rel("b2 a2"), rel("b4 a4"), rel("b4 b1"),
       rel("b4 a2 b2"), rel("a1 a2 a3"), rel("a2 b2 a4"), rel("b3 b2 b1"),
       rel("b1 a1 a2", (-1, "a2 a3 b3")), rel("b2 b1 a1", (-1, "a3 b3 b2")),
       rel("a2 b2 b1 a1", (-1, "b1 a1 a2 b2"))], 7)

write("U4", ["1", "2", "3", "4"], line(4),
      [rel("a1 b1"), rel("a2 b2"), rel("a1 a2 a3"), rel("b3 b2 b1"), rel("a3 b3", (-1, "b2 a2"))], 5)

write("N5", ["1", "2", "3", "4", "5"], line(5),
      [rel("a1 b1"), rel("a2 b2"), rel("a3 b3"), rel("b4 a4"), rel("a1 a2 a3 a4"),
       rel("b4 b3 b2 b1"), rel("b2 a2", (-1, "a3 a4 b4 b3")),
       rel("a2 a3 a4 b4", (-1, "b1 a1 a2 a3")), rel("b3 b2 b1 a1", (-1, "a4 b4 b3 b2"))], 8)

write("M4", ["1", "2", "3", "4"],
      [("a1", "1", "2"), ("b1", "2", "1"), ("a2", "2", "3"), ("b2", "3", "2"),
       ("a3", "2", "4"), ("b3", "4", "2")],
      [rel("a1 b1"), rel("b3 a3"), rel("a1 a2"), rel("b2 b1"), rel("a1 a3 b3"), rel("a3 b3 b1"),
       rel("b1 a1", (-1, "a2 b2"))], 5)

# preprojective algebra of type D_4 on the D4 quiver shape (center "2")
write("P4", ["1", "2", "3", "4"],
      [("a1", "1", "2"), ("b1", "2", "1"), ("a3", "3", "2"), ("b3", "2", "3"),
       ("a4", "4", "2"), ("b4", "2", "4")],
      [rel("a1 b1"), rel("a3 b3"), rel("a4 b4"), rel("b1 a1", "b3 a3", "b4 a4")], 5)

# central-radical quotients used for the invariance checks
QUOTIENTS = {
    "D3_tilde": ("D3", [rel("a2 b2"), rel("b2 b1 a1 a2")]),
    "D4_tilde": ("D4", [rel("b2 a2"), rel("a3 b3"), rel("a2 b1 a1 b2")]),
    "R4_tilde": ("R4", [rel("b1 a1"), rel("b2 a2", "b3 a3")]),
    "H4_tilde": ("H4", [rel("b1 a1"), rel("b2 a2", "b3 a3"), rel("b3 b2 a2 a3")]),
    "K4_tilde": ("K4", [rel("b1 a1"), rel("a3 b3"), rel("b3 b2 a2 a3")]),
    "U4_tilde": ("U4", [rel("b2 a2"), rel("b3 a3"), rel("b2 b1 a1 a2")]),
}
for name, (base, gens) in QUOTIENTS.items():
    (OUT / f"{name}.json").write_text(
        json.dumps({"name": name, "quotient_of": base, "by": gens}, indent=1) + "\n", encoding="utf-8")

SUMS = {
    # p = 2
    "S(2,4)_p2": [["D3", None]],
    "S(2,6)_p2": [["K4", None]],
    "S(2,8)_p2": [["L5", None]],
    "S(2,9)_p2": [["D3", None], ["A_1", None], ["A_1", None]],
    "S(2,11)_p2": [["D3", ["10,1", "6,5", "8,3"]], ["A_2", ["11", "7,4"]], ["A_1", ["9,2"]]],
    "S(2,13)_p2": [["K4", None], ["A_2", None], ["A_1", None]],
    "S(2,15)_p2": [["K4", None], ["A_2", None], ["A_1", None], ["A_1", None]],
    "S(2,17)_p2": [["L5", None], ["A_2", None], ["A_1", None], ["A_1", None]],
    "S(2,19)_p2": [["D3", None], ["L5", None], ["A_1", None], ["A_1", None]],
    "S(3,4)_p2": [["M4", None]],
    "S(3,5)_p2": [["U4", None], ["A_1", None]],
    "S(4,5)_p2": [["U4", None], ["A_2", None]],
    "S(5,5)_p2": [["N5", None], ["A_2", None]],
    # p = 3
    "S(2,9)_p3": [["D4", None], ["A_1", None]],
    "S(2,10)_p3": [["D4", None], ["A_1", None], ["A_1", None]],
    "S(2,11)_p3": [["D4", None], ["A_2", None]],
    "S(3,7)_p3": [["R4", None], ["A_2", None], ["A_2", None]],
    "S(3,8)_p3": [["R4", None], ["H4", None], ["A_2", None]],
}
for name, parts in SUMS.items():
    p = int(name.split("_p")[1])
    fname = name.replace("(", "_").replace(")", "").replace(",", "_")
    (OUT / f"{fname}.json").write_text(
        json.dumps({"name": name, "char": p, "direct_sum": parts}, indent=1) + "\n", encoding="utf-8")

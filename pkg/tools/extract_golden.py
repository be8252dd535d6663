"""Dev helper: pull the printed two-part Young characters (p = 2) out of a
LaTeX/markdown source into tests/data/young_characters.json.

Usage: python tools/extract_golden.py SOURCE.md
"""
import json
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
LINES = Path(sys.argv[1]).read_text(encoding="utf-8").splitlines()
SPANS = [(293, 295), (703, 706), (752, 755), (807, 811), (881, 885), (920, 925)]
ENTRY = re.compile(r"Y\^\{?\(([^)]*)\)\}?&?=(.*?)(?=\\ \\mathsf|,\s*\\ \\mathsf|;|\\\\|$)")
CHI = re.compile(r"\\chi\^\{\(([^)]*)\)\}")


def parts(s: str) -> list[int]:
    out = []
    for tok in s.split(","):
        base, _, exp = tok.strip().partition("^")
        out += [int(base)] * (int(exp) if exp else 1)
    return out


lists: dict[str, dict[str, list[list[int]]]] = {}
for a, b in SPANS:
    text = " ".join(LINES[a - 1:b])
    for m in ENTRY.finditer(text):
        lam = parts(m.group(1))
        chis = [parts(c) for c in CHI.findall(m.group(2))]
        r = sum(lam)
        lists.setdefault(str(r), {})[",".join(map(str, lam))] = chis
out = ROOT / "tests" / "data" / "young_characters.json"
out.write_text(json.dumps(lists, indent=1, sort_keys=True) + "\n", encoding="utf-8")
for r, d in sorted(lists.items(), key=lambda t: int(t[0])):
    print(r, {k: len(v) for k, v in d.items()})

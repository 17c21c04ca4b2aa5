"""Regenerate ``_tables.py`` from exhaustive oracle runs.

Run ``python -m cubepaths.constructor.generate`` after changing the
canonical-form order or the table families; the output is deterministic.
"""
from __future__ import annotations

import argparse
from pathlib import Path
from pprint import pformat

from ..connector import UNCONNECTABLE
from ..enumeration import Filter, census, enumerate_classes
from ..oracle import oracle_solve
from ..pairset import PairSet

# (dimension, filter, why the family is tabulated)
FAMILIES = [
    (1, Filter(sizes=(1,)), "every pair-set of Q_1"),
    (2, Filter(sizes=(1, 2, 3, 4)), "every pair-set of Q_2"),
    (3, Filter(sizes=(1, 2), balanced=True), "balanced pair-sets of Q_3 with at most two pairs"),
    (
        3,
        Filter(sizes=(3,), diminishable=True, edge_pairs=(2, 2)),
        "two edge-pairs plus a diametrical pair in Q_3",
    ),
]


def _fixed(cover: int, i: int, n: int) -> bool:
    vals = {v >> i & 1 for v in range(1 << n) if cover >> v & 1}
    return len(vals) == 1


def build() -> dict:
    tables: dict[int, dict] = {}
    for n, flt, _ in FAMILIES:
        tab = tables.setdefault(n, {})
        for rec in enumerate_classes(n, flt):
            key = tuple((p.a, p.b) if p.a <= p.b else (p.b, p.a) for p in rec.rep.pairs)
            key = tuple(sorted(key))
            v = oracle_solve(rec.rep, certificates=False)
            if v.connectable:
                tab[key] = tuple(v.connector[p] for p in rec.rep.pairs)
            else:
                tab[key] = None

    q3 = census(3, Filter(sizes=(2,), balanced=True))
    bad3 = [c.rep for c in q3.with_status(UNCONNECTABLE)]
    if len(bad3) != 2:
        raise RuntimeError(f"expected two forbidden classes in Q_3, found {len(bad3)}")
    # C0: both pairs are diagonals of one square face; C1: diagonals of opposite faces
    face = [r for r in bad3 if sum(_fixed(r.cover, i, 3) for i in range(3)) == 1]
    other = [r for r in bad3 if r not in face]
    q4 = census(4, Filter(sizes=(1, 2, 3), odd=True))
    bad4 = [c.rep for c in q4.with_status(UNCONNECTABLE)]
    if len(bad4) != 1:
        raise RuntimeError(f"expected one forbidden odd class in Q_4, found {len(bad4)}")
    forbidden = {
        "C0": (3, _key(face[0])),
        "C1": (3, _key(other[0])),
        "C2": (4, _key(bad4[0])),
    }
    return {"tables": tables, "forbidden": forbidden}


def _key(rep: PairSet):
    return tuple(sorted((min(p), max(p)) for p in rep.pairs))


HEADER = '''"""Generated by ``python -m cubepaths.constructor.generate``; do not edit.

Base connectors and forbidden configurations derived by exhaustive oracle
search (``oracle_solve`` with certificates disabled) over these families:

{families}

``TABLES[n][key]`` maps a canonical key (sorted ``(u, v)`` int pairs, as
produced by ``symmetry.canonical_key``) to the paths of a connector of that
representative, listed in pair order, or ``None`` when the search refuted it.

``FORBIDDEN`` holds the non-connectable classes: C0 and C1 are the two
balanced two-pair classes of Q_3 (C0 has both pairs on one square face),
C2 is the single non-connectable odd class of Q_4 with at most three pairs.
"""
'''


def render(data: dict) -> str:
    fams = "\n".join(f"* n={n}: {why} ({flt.describe()})" for n, flt, why in FAMILIES)
    body = HEADER.format(families=fams)
    body += "\nTABLES = " + pformat(data["tables"], width=100) + "\n"
    body += "\nFORBIDDEN = " + pformat(data["forbidden"], width=100) + "\n"
    return body


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--out", type=Path, default=Path(__file__).with_name("_tables.py"), help="output module"
    )
    args = ap.parse_args(argv)
    args.out.write_text(render(build()))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()

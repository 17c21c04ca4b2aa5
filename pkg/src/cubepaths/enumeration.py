"""Isomorphism-class enumeration of pair-sets and connectability censuses."""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .connector import CONNECTABLE, UNCONNECTABLE, UNSUPPORTED, Verdict
from .hypercube import DimensionError
from .pairset import PairSet, PairSetError, all_pairs, classify, enc_mask, validate_pairset
from .symmetry import canonical_form, canonical_key, group_order, group_tables

ENUM_CAP = 5


@dataclass(frozen=True)
class Filter:
    """Conjunction of predicates on a pair-set; ``None`` means "don't care"."""

    sizes: tuple[int, ...] = (1,)
    odd: bool | None = None
    balanced: bool | None = None
    pure: bool | None = None
    edge_pairs: tuple[int, int] | None = None
    enc_empty: bool | None = None
    diminishable: bool | None = None

    def accepts(self, A: PairSet) -> bool:
        if len(A) not in self.sizes:
            return False
        f = classify(A)
        if self.odd is not None and f.odd != self.odd:
            return False
        if self.balanced is not None and f.balanced != self.balanced:
            return False
        if self.pure is not None and f.pure != self.pure:
            return False
        if self.edge_pairs is not None:
            lo, hi = self.edge_pairs
            if not lo <= f.edge_pair_count <= hi:
                return False
        if self.enc_empty is not None and (enc_mask(A.cover, A.n)[1] == 0) != self.enc_empty:
            return False
        if self.diminishable is not None and f.diminishable != self.diminishable:
            return False
        return True

    @property
    def pair_kind(self) -> str:
        if self.odd or self.diminishable:
            return "odd"
        if self.pure:
            return "nondegenerate"
        return "any"

    def describe(self) -> str:
        parts = [f"size in {list(self.sizes)}"]
        for name in ("odd", "balanced", "pure", "enc_empty", "diminishable"):
            val = getattr(self, name)
            if val is not None:
                parts.append(name if val else f"not {name}")
        if self.edge_pairs is not None:
            lo, hi = self.edge_pairs
            if lo == hi:
                parts.append(f"edge-pairs {lo}")
            elif hi >= 1 << 16:
                parts.append(f"edge-pairs at least {lo}")
            else:
                parts.append(f"edge-pairs {lo}..{hi}")
        return ", ".join(parts)


@dataclass(frozen=True)
class ClassRecord:
    rep: PairSet
    orbit_size: int


def _stabilizer(key, n):
    return [t for _, t in group_tables(n) if _img(t, key) == key]


def _img(t, pairs):
    out = []
    for a, b in pairs:
        x, y = t[a], t[b]
        out.append((x, y) if x <= y else (y, x))
    out.sort()
    return tuple(out)


def _extend(level: set, universe: list[tuple[int, int]], n: int) -> set:
    """Canonical keys of every one-pair extension of the classes in ``level``."""
    out = set()
    for key in sorted(level):
        used = 0
        for a, b in key:
            used |= (1 << a) | (1 << b)
        stab = _stabilizer(key, n)
        seen = set()
        for p in universe:
            if used >> p[0] & 1 or used >> p[1] & 1 or p in seen:
                continue
            # one representative per orbit of the stabiliser on candidate pairs
            for t in stab:
                x, y = t[p[0]], t[p[1]]
                seen.add((x, y) if x <= y else (y, x))
            out.add(canonical_key(key + (p,), n))
    return out


def enumerate_classes(n: int, flt: Filter) -> Iterator[ClassRecord]:
    """Yield one canonical representative per isomorphism class passing ``flt``.

    Order: by size, then by canonical key.
    """
    if not 1 <= n <= ENUM_CAP:
        raise DimensionError(f"enumeration supports 1 <= n <= {ENUM_CAP}")
    universe = all_pairs(n, flt.pair_kind)
    level: set = {()}
    top = max(flt.sizes)
    for size in range(1, top + 1):
        level = _extend(level, universe, n)
        if size not in flt.sizes:
            continue
        for key in sorted(level):
            if all(a == b for a, b in key):
                continue
            A = validate_pairset(key, n)
            if flt.accepts(A):
                yield ClassRecord(A, canonical_form(A).orbit_size)


def raw_count(n: int, flt: Filter) -> int:
    """Count every pair-set passing ``flt`` directly, without symmetry."""
    universe = all_pairs(n, flt.pair_kind)
    top = max(flt.sizes)
    total = 0

    def rec(start: int, chosen: list, used: int) -> None:
        nonlocal total
        if len(chosen) in flt.sizes and not all(a == b for a, b in chosen):
            if flt.accepts(validate_pairset(chosen, n)):
                total += 1
        if len(chosen) == top:
            return
        for idx in range(start, len(universe)):
            a, b = universe[idx]
            if used >> a & 1 or used >> b & 1:
                continue
            chosen.append((a, b))
            rec(idx + 1, chosen, used | (1 << a) | (1 << b))
            chosen.pop()

    rec(0, [], 0)
    return total


# --- census ---------------------------------------------------------------


class CensusDisagreement(RuntimeError):
    pass


@dataclass
class ClassResult:
    rep: PairSet
    orbit_size: int
    status: str
    certificate: str | None = None
    configuration: str | None = None


@dataclass
class Census:
    n: int
    filter: Filter
    source: str
    classes: list[ClassResult] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def raw_count(self) -> int:
        return sum(c.orbit_size for c in self.classes)

    def with_status(self, status: str) -> list[ClassResult]:
        return [c for c in self.classes if c.status == status]

    def counts(self, status: str) -> tuple[int, int]:
        """``(classes, raw instances)`` with the given verdict."""
        hits = self.with_status(status)
        return len(hits), sum(c.orbit_size for c in hits)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "filter": self.filter.describe(),
            "source": self.source,
            "classes": self.class_count,
            "raw": self.raw_count,
        }
        for status in (CONNECTABLE, UNCONNECTABLE, UNSUPPORTED):
            c, r = self.counts(status)
            out[status] = {"classes": c, "raw": r}
        out["representatives"] = [
            {
                "pairs": c.rep.format(),
                "orbit_size": c.orbit_size,
                "verdict": c.status,
                "certificate": c.certificate,
                "configuration": c.configuration,
            }
            for c in self.classes
        ]
        return out


def decide(A: PairSet, source: str) -> Verdict:
    """Verdict for ``A`` from ``oracle``, ``constructor``, ``auto`` or ``both`` (cross-checked)."""
    if source == "oracle":
        from .oracle import oracle_solve

        return oracle_solve(A)
    if source == "constructor":
        from .constructor import solve

        return solve(A)
    if source == "auto":
        from .constructor import solve_auto

        return solve_auto(A)
    if source == "both":
        from .constructor import solve
        from .oracle import oracle_solve

        v_or = oracle_solve(A)
        v_co = solve(A)
        if v_or.status != v_co.status:
            raise CensusDisagreement(
                f"{A}: oracle says {v_or.status}, constructor says {v_co.status}"
            )
        if v_co.configuration is not None:
            v_or.configuration = v_co.configuration
        return v_or
    raise ValueError(f"unknown verdict source {source!r}")


def _job(args) -> tuple[str, str | None, str | None]:
    A, source = args
    v = decide(A, source)
    return v.status, v.certificate, v.configuration


def census(n: int, flt: Filter, source: str = "oracle", jobs: int = 1) -> Census:
    records = list(enumerate_classes(n, flt))
    tasks = [(r.rep, source) for r in records]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_job, tasks, chunksize=8))
    else:
        results = [_job(t) for t in tasks]
    out = Census(n, flt, source)
    for r, (status, cert, conf) in zip(records, results):
        out.classes.append(ClassResult(r.rep, r.orbit_size, status, cert, conf))
    return out


def sample_pairsets(n: int, flt: Filter, count: int, rng: random.Random, max_tries: int = 10**6):
    """Draw ``count`` random raw pair-sets accepted by ``flt``.

    For a fixed size every pair-set is equally likely; the size itself is
    drawn uniformly from ``flt.sizes``.
    """
    universe = all_pairs(n, flt.pair_kind)
    out: list[PairSet] = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError(f"filter accepted only {len(out)} of {max_tries} draws")
        size = rng.choice(flt.sizes)
        chosen, used, misses = [], 0, 0
        while len(chosen) < size and misses < 1000:
            a, b = rng.choice(universe)
            m = 1 << a | 1 << b
            if used & m:
                misses += 1
                continue
            chosen.append((a, b))
            used |= m
        if len(chosen) < size:
            continue
        try:
            A = validate_pairset(chosen, n)
        except PairSetError:
            continue
        if flt.accepts(A):
            out.append(A)
    return out


def orbit_check(rep: PairSet) -> bool:
    """Orbit size times stabiliser order equals the group order."""
    cf = canonical_form(rep)
    return cf.orbit_size * cf.stabilizer_order == group_order(rep.n)

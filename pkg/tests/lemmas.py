"""Checks of the basic lemma about pair-sets, shared by the property and acceptance suites.

Every check returns ``(cases, violations)`` where ``violations`` is a list of
short descriptions.  Exhaustive sweeps cover n <= 4 where that is cheap;
elsewhere a seeded random stream supplies at least a thousand cases.
"""
from __future__ import annotations

import random
from itertools import combinations

from reference import all_pairsets

from cubepaths.connector import verify_connector
from cubepaths.constructor import apply_merge_to_connector, lift_connectors
from cubepaths.oracle import oracle_solve
from cubepaths.pairset import (
    MergeStep,
    PairSet,
    apply_step,
    classify,
    is_complete,
    is_separating,
    iota_set,
    lies_on_six_cycle,
    rho_set,
    separating_coordinate,
    validate_pairset,
)

RANDOM_CASES = 1000


def merge_steps(A: PairSet):
    """Every merge applicable to ``A``, in both orientations of both pairs."""
    out = []
    for p in A.pairs:
        for q in A.pairs:
            if p == q:
                continue
            for beta in {p.a, p.b}:
                for beta2 in {q.a, q.b}:
                    d = beta ^ beta2
                    if d and d & (d - 1) == 0:
                        out.append(MergeStep(p.other(beta), beta, q.other(beta2), beta2))
    return out


def random_pairset(rng: random.Random, n: int, size: int, odd: bool = False) -> PairSet:
    while True:
        verts = rng.sample(range(1 << n), 2 * size)
        pairs = []
        for j in range(size):
            u, v = verts[2 * j], verts[2 * j + 1]
            if not odd and rng.random() < 0.2:
                v = u
            pairs.append((u, v))
        if odd and any((u ^ v).bit_count() % 2 == 0 for u, v in pairs):
            continue
        if all(u == v for u, v in pairs):
            continue
        return validate_pairset(pairs, n)


def _pieces(n: int, sizes):
    return [A for s in sizes for A in all_pairsets(n, s)]


def check_rho_iota(rng: random.Random):
    bad, cases = [], 0

    def one(A0, A1, i, k):
        B = iota_set(A0, A1, i, k)
        if rho_set(B, i, k) != A0 or rho_set(B, i, 1 - k) != A1:
            bad.append(f"{A0} | {A1} at i={i}, k={k}")

    for n, sizes in ((3, (1, 2, 3, 4)), (4, (1,))):
        pieces = _pieces(n - 1, sizes)
        for A0 in pieces:
            for A1 in pieces:
                for i in range(n):
                    for k in (0, 1):
                        one(A0, A1, i, k)
                        cases += 1
    for _ in range(RANDOM_CASES):
        m = rng.randint(3, 5)
        A0 = random_pairset(rng, m, rng.randint(1, 4))
        A1 = random_pairset(rng, m, rng.randint(1, 4))
        one(A0, A1, rng.randrange(m + 1), rng.randrange(2))
        cases += 1
    return cases, bad


def check_chi_under_merge(rng: random.Random):
    bad, cases = [], 0
    for size in (2, 3, 4):
        for A in all_pairsets(3, size):
            for step in merge_steps(A):
                if apply_step(A, step).chi != A.chi:
                    bad.append(f"{A} via {step}")
                cases += 1
    done = 0
    while done < RANDOM_CASES:
        A = random_pairset(rng, rng.randint(4, 6), rng.randint(2, 5))
        steps = merge_steps(A)
        if not steps:
            continue
        step = rng.choice(steps)
        if apply_step(A, step).chi != A.chi:
            bad.append(f"{A} via {step}")
        done += 1
    return cases + done, bad


def check_odd_balanced(rng: random.Random):
    bad, cases = [], 0
    for n, sizes in ((2, (1, 2)), (3, (1, 2, 3, 4)), (4, (1, 2, 3))):
        for s in sizes:
            for A in all_pairsets(n, s, "odd"):
                if not classify(A).balanced:
                    bad.append(str(A))
                cases += 1
    for _ in range(RANDOM_CASES):
        A = random_pairset(rng, rng.randint(5, 8), rng.randint(1, 8), odd=True)
        if not classify(A).balanced:
            bad.append(str(A))
        cases += 1
    return cases, bad


def check_connectable_balanced():
    bad, cases = [], 0
    for s in (1, 2, 3, 4):
        for A in all_pairsets(3, s):
            if oracle_solve(A).connectable and A.chi != 0:
                bad.append(str(A))
            cases += 1
    return cases, bad


def _solved(n, sizes):
    out = []
    for A in _pieces(n, sizes):
        v = oracle_solve(A)
        if v.connectable:
            out.append((A, v.connector))
    return out


def check_lift(rng: random.Random):
    bad, cases = [], 0

    def one(A0, C0, A1, C1, i, k):
        B = iota_set(A0, A1, i, k)
        C = lift_connectors(C0, C1, i, k, A0, A1)
        if verify_connector(B, C) is not None:
            bad.append(f"{A0} | {A1} at i={i}, k={k}")

    q2 = _solved(2, (1, 2, 3, 4))
    for A0, C0 in q2:
        for A1, C1 in q2:
            for i in range(3):
                for k in (0, 1):
                    one(A0, C0, A1, C1, i, k)
                    cases += 1
    q3 = _solved(3, (1, 2))
    for _ in range(RANDOM_CASES):
        (A0, C0), (A1, C1) = rng.choice(q3), rng.choice(q3)
        one(A0, C0, A1, C1, rng.randrange(4), rng.randrange(2))
        cases += 1
    return cases, bad


def check_merge(rng: random.Random):
    bad, cases = [], 0

    def one(A, C, step):
        B = apply_step(A, step)
        if verify_connector(B, apply_merge_to_connector(C, step, A.n)) is not None:
            bad.append(f"{A} via {step}")

    for A, C in _solved(3, (2, 3, 4)):
        for step in merge_steps(A):
            one(A, C, step)
            cases += 1
    done = 0
    while done < RANDOM_CASES:
        A = random_pairset(rng, 4, rng.randint(2, 4), odd=True)
        steps = merge_steps(A)
        v = oracle_solve(A)
        if not steps or not v.connectable:
            continue
        one(A, v.connector, rng.choice(steps))
        done += 1
    return cases + done, bad


def _edge_pairsets(n, size):
    edges = [(u, u | 1 << i) for u in range(1 << n) for i in range(n) if not u >> i & 1]
    for combo in combinations(edges, size):
        ends = [x for e in combo for x in e]
        if len(set(ends)) == len(ends):
            yield validate_pairset(combo, n)


def check_separating_law():
    """Returned coordinate separates and completes; the obstruction occurs exactly on six-cycles."""
    bad, cases = [], 0
    for n in (2, 3, 4):
        for size in (2, 3):
            for A in _edge_pairsets(n, size):
                cases += 1
                exists = any(is_separating(A, i) and is_complete(A, i) for i in range(n))
                six = lies_on_six_cycle(list(A.pairs), n)
                r = separating_coordinate(A)
                if isinstance(r, int):
                    if not (is_separating(A, r) and is_complete(A, r)):
                        bad.append(f"{A}: coordinate {r} fails")
                    if six:
                        bad.append(f"{A}: six-cycle missed")
                elif exists or not six:
                    bad.append(f"{A}: obstruction reported wrongly")
    return cases, bad


def lemma_suite(seed: int = 7):
    rng = random.Random(seed)
    return {
        "rho-iota identities": check_rho_iota(rng),
        "chi preserved by merges": check_chi_under_merge(rng),
        "odd implies balanced": check_odd_balanced(rng),
        "connectable implies balanced": check_connectable_balanced(),
        "lift validity": check_lift(rng),
        "merge validity": check_merge(rng),
        "separating coordinate law": check_separating_law(),
    }

import random
from itertools import combinations

import pytest
from reference import all_pairsets, naive_neighbours, naive_parity

from cubepaths.pairset import (
    CompletionScript,
    NotAPairSet,
    PairSet,
    PairSetError,
    SixCycleObstruction,
    classify,
    encompassment,
    find_completion,
    find_merge_script,
    in_facet,
    iota_set,
    is_complete,
    is_separating,
    lies_on_six_cycle,
    merge_step,
    replay,
    rho_set,
    separating_coordinate,
    sigma,
    validate_pairset,
)
from cubepaths.hypercube import parse_bits


def P(text, n=None):
    return PairSet.parse(text, n)


def b(s):
    return parse_bits(s)[1]


# --- validation --------------------------------------------------------------


def test_validate_examples():
    A = validate_pairset([(b("00"), b("01")), (b("10"), b("11"))], 2)
    assert len(A) == 2
    with pytest.raises(PairSetError) as e:
        validate_pairset([(b("00"), b("01")), (b("01"), b("11"))], 2)
    assert e.value.clause == "disjoint"
    with pytest.raises(PairSetError) as e:
        validate_pairset([(b("00"), b("00"))], 2)
    assert e.value.clause == "nondegenerate"
    with pytest.raises(PairSetError) as e:
        P("00-01,100-111")
    assert e.value.clause == "dimension"


def test_canonical_storage_order():
    A = P("111-110,001-000")
    assert A.format() == "000-001,110-111"
    assert A == P("000-001,110-111")
    assert P("0101,0000-0001").format() == "0000-0001,0101-0101"


def test_empty_pairset_allowed():
    assert len(validate_pairset([], 3)) == 0


# --- classification ------------------------------------------------------------


def test_classify_single_odd_pair():
    f = classify(P("000-001"))
    assert f.odd and f.balanced and f.pure and f.edge_pair_count == 1 and f.diminishable


def test_classify_even_and_degenerate():
    f = classify(P("00-11,01-01"))
    assert f.chi == 0 and f.balanced and not f.odd and not f.pure
    assert P("00-11").pairs[0].chi == 2
    assert P("00-11,01").pairs[1].chi == -2


def test_facet_odd_triple_not_diminishable():
    # three odd non-edge pairs inside the facet x0 = 0
    A = P("0000-0111,0001-0110,0010-0101")
    assert all(not p.is_edge for p in A.pairs)
    assert in_facet(A.cover, 4)
    assert not classify(A).diminishable


def test_chi_against_reference():
    for A in all_pairsets(3, 2):
        ref = sum(naive_parity(p.a, 3) + naive_parity(p.b, 3) for p in A.pairs)
        assert A.chi == ref


def test_odd_implies_balanced_exhaustive():
    for n, size in ((2, 2), (3, 3), (4, 2)):
        for A in all_pairsets(n, size, "odd"):
            assert classify(A).balanced


def _induced_three_regular(X, n):
    xs = set(X)
    for v in xs:
        if sum(w in xs for w in naive_neighbours(v, n)) != 3:
            return False
    return True


def test_facets_are_the_only_induced_cubes_of_q4():
    # any X inducing Q_3 is 3-regular; check 3-regular 8-sets are exactly the facets
    regular = [X for X in combinations(range(16), 8) if _induced_three_regular(X, 4)]
    facets = {frozenset(v for v in range(16) if v >> i & 1 == k) for i in range(4) for k in (0, 1)}
    assert {frozenset(X) for X in regular} == facets
    for X in regular:
        assert in_facet(sum(1 << v for v in X), 4)


def test_diminishable_size_n_clause():
    # edge-pairs on a six-cycle leave 000 and 111 encompassed
    six = P("001-011,010-110,100-101")
    assert encompassment(six)[1] == frozenset({0, 7})
    assert not classify(six).diminishable
    ok = P("000-001,010-011,100-110")
    assert encompassment(ok)[1] == frozenset()
    assert classify(ok).diminishable


# --- sigma, rho, iota -------------------------------------------------------------


def test_sigma_examples():
    assert tuple(sigma(P("00-01"), 0)) == (1, 0)
    assert tuple(sigma(P("00-01"), 1)) == (0, 0)
    assert tuple(sigma(P("000-001,110-111"), 0)) == (1, 1)


def test_rho_set_examples():
    assert rho_set(P("000-011,100-111"), 0, 0) == P("00-11")
    # the surviving projection is a single degenerate pair: not a pair-set
    out = rho_set(P("010,000-101"), 1, 1)
    assert isinstance(out, NotAPairSet)
    assert [(p.a, p.b) for p in out.pairs] == [(0, 0)]
    # 010 and 011 differ in the last coordinate, so their projection at i=1 is not degenerate
    assert rho_set(P("010-011"), 1, 1) == P("00-01")


def test_iota_set_examples():
    assert iota_set(P("00-11"), P("01-10"), 0, 0) == P("000-011,101-110")
    assert iota_set(validate_pairset([], 1), P("0-1"), 1, 0) == P("01-11")


def test_rho_iota_identities_random():
    rng = random.Random(5)
    done = 0
    while done < 1000:
        n = rng.randint(2, 5)
        m = n - 1
        A0 = _random_pairset(rng, m, rng.randint(0, 2))
        A1 = _random_pairset(rng, m, rng.randint(0, 2))
        if A0 is None or A1 is None:
            continue
        i, k = rng.randrange(n), rng.randint(0, 1)
        B = iota_set(A0, A1, i, k)
        assert rho_set(B, i, k) == A0
        assert rho_set(B, i, 1 - k) == A1
        for kk in (0, 1):
            r = rho_set(B, i, kk)
            assert len(r.pairs) == sigma(B, i)[kk]
        done += 1


def _random_pairset(rng, n, size):
    verts = list(range(1 << n))
    if 2 * size > len(verts):
        return None
    rng.shuffle(verts)
    pairs = [(verts[2 * j], verts[2 * j + 1]) for j in range(size)]
    try:
        return validate_pairset(pairs, n)
    except PairSetError:
        return None


# --- encompassment ------------------------------------------------------------


def test_encompassment_examples():
    A = P("001-011,010-110,100-111")
    assert 0 in encompassment(A)[1]
    assert encompassment(P("000-111"))[1] == frozenset()


def test_encompassment_matches_neighbour_scan_q3():
    for size in (1, 2, 3, 4):
        for A in all_pairsets(3, size, "pure"):
            cover = {v for p in A.pairs for v in (p.a, p.b)}
            enco = {v for v in range(8) if all(w in cover for w in naive_neighbours(v, 3))}
            got_enco, got_enc = encompassment(A)
            assert got_enco == enco
            assert got_enc == enco - cover


# --- separating coordinates ------------------------------------------------------


def test_separating_example():
    A = P("000-001,110-111")
    assert is_separating(A, 0)
    i = separating_coordinate(A)
    assert is_separating(A, i) and is_complete(A, i)


def test_six_cycle_obstruction_example():
    A = P("001-011,010-110,100-101")
    assert lies_on_six_cycle(A.pairs, 3)
    assert isinstance(separating_coordinate(A), SixCycleObstruction)


def _edge_sets(n, size):
    edges = [(u, u ^ (1 << i)) for u in range(1 << n) for i in range(n) if not u >> i & 1]
    for combo in combinations(edges, size):
        ends = [x for e in combo for x in e]
        if len(set(ends)) == len(ends):
            yield validate_pairset(combo, n)


def _six_cycle_by_search(A):
    """Independent test: the six ends induce a connected 2-regular graph."""
    ends = [v for p in A.pairs for v in (p.a, p.b)]
    adj = {v: [w for w in ends if (v ^ w).bit_count() == 1] for v in ends}
    if any(len(x) != 2 for x in adj.values()):
        return False
    seen, stack = {ends[0]}, [ends[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == 6


@pytest.mark.parametrize("n", [2, 3, 4])
def test_separating_law_exhaustive(n):
    for size in (2, 3):
        if 2 * size > 1 << n:
            continue
        for A in _edge_sets(n, size):
            got = separating_coordinate(A)
            scan = [i for i in range(n) if is_separating(A, i) and is_complete(A, i)]
            if isinstance(got, SixCycleObstruction):
                assert size == 3 and _six_cycle_by_search(A)
                assert scan == []
            else:
                assert got in scan


def test_separating_rejects_wrong_shape():
    with pytest.raises(ValueError):
        separating_coordinate(P("000-111"))


# --- merges and completions ---------------------------------------------------------


def test_merge_examples():
    A = P("000-001,011-010")
    out = merge_step(A, (b("000"), b("001")), (b("010"), b("011")), 1)
    assert out == P("000-010")
    A = P("00-01,11-10")
    assert merge_step(A, (b("00"), b("01")), (b("10"), b("11")), 0) == P("00-10")


def test_merge_bridge_condition():
    A = P("000-001,011-010")
    with pytest.raises(PairSetError):
        merge_step(A, (b("000"), b("001")), (b("011"), b("010")), 1)


def test_merge_preserves_chi_random():
    rng = random.Random(3)
    count = 0
    while count < 1000:
        n = rng.randint(2, 5)
        A = _random_pairset(rng, n, rng.randint(2, 4))
        if A is None:
            continue
        p, q = rng.sample(list(A.pairs), 2)
        alpha, beta = rng.sample([p.a, p.b], 2) if not p.degenerate else (p.a, p.a)
        alpha2, beta2 = rng.sample([q.a, q.b], 2) if not q.degenerate else (q.a, q.a)
        if (beta ^ beta2).bit_count() != 1:
            continue
        try:
            B = merge_step(A, (alpha, beta), (alpha2, beta2), (beta ^ beta2).bit_length() - 1)
        except PairSetError:
            continue
        assert B.chi == A.chi
        count += 1


def test_completion_of_complete_set_is_trivial():
    A = P("0000-0001,0010-0011,0100-0111")
    B, script = find_completion(A)
    assert isinstance(script, CompletionScript)
    assert B == A and script.steps == ()


def test_completion_exhaustive_q4_three_odd_pairs():
    seen = 0
    for A in all_pairsets(4, 3, "odd"):
        found = find_completion(A)
        assert found is not None, A
        B, script = found
        assert is_complete(B, script.coordinate)
        assert replay(B, script.steps) == A
        seen += 1
    assert seen == 18816


def test_find_merge_script_roundtrip():
    A = P("0000-0111,0001-0110,0011-0100")
    B, script = find_completion(A)
    steps = find_merge_script(B, A)
    assert steps is not None and replay(B, steps) == A

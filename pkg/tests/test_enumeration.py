import random

import pytest
from reference import all_pairsets

import cubepaths.constructor as constructor
from cubepaths.connector import CONNECTABLE, UNCONNECTABLE, Verdict
from cubepaths.enumeration import (
    CensusDisagreement,
    Filter,
    census,
    enumerate_classes,
    orbit_check,
    raw_count,
    sample_pairsets,
)
from cubepaths.hypercube import DimensionError
from cubepaths.symmetry import Automorphism, apply_automorphism, canonical_key


def _reference_count(n, flt, sizes, kind="any"):
    return sum(1 for s in sizes for A in all_pairsets(n, s, kind) if flt.accepts(A))


def test_single_odd_pair_in_q2_is_one_class():
    classes = list(enumerate_classes(2, Filter(sizes=(1,), odd=True)))
    assert len(classes) == 1
    assert classes[0].orbit_size == 4


@pytest.mark.parametrize(
    "n,flt",
    [
        (2, Filter(sizes=(1, 2, 3, 4))),
        (3, Filter(sizes=(1, 2, 3))),
        (3, Filter(sizes=(2,), balanced=True)),
        (3, Filter(sizes=(3,), diminishable=True)),
        (4, Filter(sizes=(2,), odd=True)),
        (4, Filter(sizes=(2,), pure=True, balanced=True)),
    ],
    ids=str,
)
def test_orbit_sizes_sum_to_raw_count(n, flt):
    classes = list(enumerate_classes(n, flt))
    total = sum(c.orbit_size for c in classes)
    ref = _reference_count(n, flt, flt.sizes)
    assert total == ref == raw_count(n, flt)
    keys = [canonical_key(c.rep.pairs, n) for c in classes]
    assert len(set(keys)) == len(keys)


def test_orbit_stabiliser_consistency():
    for c in enumerate_classes(4, Filter(sizes=(3,), odd=True)):
        assert orbit_check(c.rep)


def test_enumeration_is_isomorphism_complete():
    rng = random.Random(21)
    flt = Filter(sizes=(3,), odd=True)
    keys = {canonical_key(c.rep.pairs, 4) for c in enumerate_classes(4, flt)}
    raw = [A for A in all_pairsets(4, 3, "odd")]
    for A in rng.sample(raw, 300):
        B = apply_automorphism(Automorphism.random(4, rng), A)
        assert canonical_key(B.pairs, 4) in keys


def test_deterministic_order():
    flt = Filter(sizes=(1, 2), balanced=True)
    first = [c.rep for c in enumerate_classes(3, flt)]
    assert first == [c.rep for c in enumerate_classes(3, flt)]


def test_q3_balanced_pairs_census():
    rep = census(3, Filter(sizes=(2,), balanced=True), source="both")
    bad = rep.with_status(UNCONNECTABLE)
    assert len(bad) == 2
    assert {c.configuration for c in bad} == {"C0", "C1"}
    assert rep.raw_count == _reference_count(3, rep.filter, (2,))


def test_census_reports_both_conventions():
    rep = census(4, Filter(sizes=(1, 2, 3), odd=True))
    classes, raw = rep.counts(UNCONNECTABLE)
    assert (classes, raw) == (1, 32)
    d = rep.to_dict()
    assert d[UNCONNECTABLE] == {"classes": 1, "raw": 32}
    assert d["raw"] == rep.raw_count


def test_census_disagreement_is_fatal(monkeypatch):
    def wrong(A):
        return Verdict(CONNECTABLE)

    monkeypatch.setattr(constructor, "solve", wrong)
    with pytest.raises(CensusDisagreement):
        census(3, Filter(sizes=(2,), balanced=True), source="both")


def test_parallel_census_matches_serial():
    flt = Filter(sizes=(2,), balanced=True)
    a = census(3, flt, jobs=1).to_dict()
    b = census(3, flt, jobs=2).to_dict()
    assert a == b


def test_dimension_cap():
    with pytest.raises(DimensionError):
        list(enumerate_classes(6, Filter(sizes=(1,))))


def test_sampler_respects_filter_and_seed():
    flt = Filter(sizes=(2, 3, 4), odd=True)
    s1 = sample_pairsets(5, flt, 50, random.Random(4))
    s2 = sample_pairsets(5, flt, 50, random.Random(4))
    assert s1 == s2
    assert all(flt.accepts(A) and A.n == 5 for A in s1)

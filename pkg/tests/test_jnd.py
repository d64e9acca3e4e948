"""Closed formula for the diagram family, invariants, recovery."""

import json
from fractions import Fraction

import pytest

from planebranch import (
    ElementarySegment,
    NewtonDiagram,
    Semigroup,
    ValidationError,
    approximate_root_semigroup,
    family_from_json_dict,
    jacobian_invariants,
    jnd_family,
    jnd_formula,
    milnor_from_semigroup,
    random_semigroup,
    recover_semigroup,
    recovery_data,
)

E = ElementarySegment
D = NewtonDiagram


def test_formula_frozen_families():
    s = Semigroup((4, 6, 13))
    assert jnd_formula(s, 0) == D([E(8, 2), E(13, 3)])
    assert jnd_formula(s, 1) == D([E(28, 14)])
    t = Semigroup((6, 8, 27))
    assert jnd_formula(t, 0) == D([E(18, 3), E(27, 4)])
    assert jnd_formula(t, 1) == D([E(64, 32)])


def test_formula_collisions():
    assert jnd_formula(Semigroup((4, 14, 31)), 1) == D([E(72, 36)])
    assert jnd_formula(Semigroup((4, 6, 35)), 1) == D([E(72, 36)])
    assert jnd_formula(Semigroup((4, 6, 37)), 1) == D([E(76, 38)])
    assert jnd_formula(Semigroup((6, 10, 31)), 1) == D([E(76, 38)])


def test_formula_rejects_bad_index():
    s = Semigroup((4, 6, 13))
    with pytest.raises(ValidationError):
        jnd_formula(s, 2)
    with pytest.raises(ValidationError):
        jnd_formula(s, -1)
    with pytest.raises(ValidationError):
        jnd_family(Semigroup((1,)))


def test_invariants_frozen():
    assert jacobian_invariants(Semigroup((4, 6, 13)), 0) == (4, Fraction(13, 3))
    assert jacobian_invariants(Semigroup((4, 6, 13)), 1) == (2,)
    assert jacobian_invariants(Semigroup((6, 8, 27)), 0) == (6, Fraction(27, 4))


def test_invariants_are_the_formula_inclinations(rng):
    # two independently coded routes to the same quantities
    for _ in range(300):
        s = random_semigroup(rng)
        if s.genus == 0:
            continue
        for k in range(s.genus):
            d = jnd_formula(s, k)
            assert tuple(seg.inclination for seg in d.segments) == jacobian_invariants(s, k)


def test_invariants_strictly_increase(rng):
    for _ in range(300):
        s = random_semigroup(rng)
        for k in range(s.genus):
            values = jacobian_invariants(s, k)
            assert all(a < b for a, b in zip(values, values[1:]))
            assert values[0] == s.gcds[k]


def test_diagram_totals_match_milnor_identities(rng):
    for _ in range(200):
        s = random_semigroup(rng)
        v = s.generators
        mu = milnor_from_semigroup(s)
        for k in range(s.genus):
            d = jnd_formula(s, k)
            mu_k = milnor_from_semigroup(approximate_root_semigroup(s, k))
            assert d.total_height() == mu_k + v[k + 1] - 1
            assert d.total_length() == mu + v[k + 1] - 1


def test_family_json_roundtrip_and_determinism():
    fam = jnd_family(Semigroup((4, 6, 13)))
    data = fam.to_json_dict()
    assert data == {
        "semigroup": [4, 6, 13],
        "diagrams": [
            {"k": 0, "segments": [[8, 2], [13, 3]]},
            {"k": 1, "segments": [[28, 14]]},
        ],
    }
    assert json.dumps(data) == json.dumps(jnd_family(Semigroup((4, 6, 13))).to_json_dict())
    claimed, diagrams = family_from_json_dict(data)
    assert claimed == Semigroup((4, 6, 13))
    assert diagrams == list(fam.diagrams)


def test_family_json_rejects_partial_or_mismatched():
    fam = jnd_family(Semigroup((4, 6, 13))).to_json_dict()
    with pytest.raises(ValidationError, match="truncat"):
        family_from_json_dict({"semigroup": [4, 6, 13], "diagrams": fam["diagrams"][1:]})
    with pytest.raises(ValidationError):
        family_from_json_dict({"semigroup": [4, 6, 13], "diagrams": []})
    wrong_genus = {"semigroup": [2, 3], "diagrams": fam["diagrams"]}
    with pytest.raises(ValidationError):
        family_from_json_dict(wrong_genus)
    dup = {"diagrams": [fam["diagrams"][0], fam["diagrams"][0]]}
    with pytest.raises(ValidationError):
        family_from_json_dict(dup)


def test_recovery_frozen():
    fam = jnd_family(Semigroup((4, 6, 13)))
    assert recover_semigroup(fam) == Semigroup((4, 6, 13))
    data = recovery_data(fam)
    assert data.semigroup == Semigroup((4, 6, 13))
    assert "multiplicity 4" in data.describe()
    assert recover_semigroup(jnd_family(Semigroup((2, 3)))) == Semigroup((2, 3))


def test_recovery_of_bare_top_diagram():
    # a single {72\36} is a complete genus-1 family in its own right
    assert recover_semigroup([D([E(72, 36)])]) == Semigroup((2, 37))


def test_recovery_certifies_against_forward_formula():
    fam = jnd_family(Semigroup((4, 6, 13)))
    tampered = [fam.diagrams[0], D([E(30, 15)])]
    with pytest.raises(ValidationError):
        recover_semigroup(tampered)
    with pytest.raises(ValidationError):
        recover_semigroup([])


def test_recovery_roundtrip(rng):
    for _ in range(300):
        s = random_semigroup(rng)
        if s.genus == 0:
            continue
        assert recover_semigroup(jnd_family(s)) == s


def test_family_container():
    fam = jnd_family(Semigroup((4, 6, 13)))
    assert len(fam) == 2
    assert fam[0] == jnd_formula(Semigroup((4, 6, 13)), 0)
    assert list(fam) == list(fam.diagrams)
    assert "k=0" in str(fam) and "semigroup <4, 6, 13>" in str(fam)

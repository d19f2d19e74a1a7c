import pytest

from drinfeld import (
    DrinfeldModule,
    SkewPoly,
    TooLarge,
    act,
    census_isomorphism_classes,
    census_records,
    characteristic_roots,
    endomorphism_ring,
    enumerate_modules,
    integral_ideals,
    same_isogeny_class,
    twist_orbit_key,
    validate_ideal_class_action,
    validate_minimal_order_occurrence,
)
from drinfeld.serialize import dumps_canonical

from conftest import get_tower


def test_characteristic_roots_cover_divisor_degrees():
    f4 = get_tower("f4")
    roots = characteristic_roots(f4)
    assert [p.degree for p, _ in roots] == [1, 1, 2]
    for p, t in roots:
        assert not p.eval_in_k(t)


def test_prime_field_census_q2():
    f2 = get_tower("f2")
    groups = census_isomorphism_classes(f2, 2, f2.zero)
    assert sorted(groups) == ["x^2+T", "x^2+x+T"]
    assert all(len(g.iso_classes) == 1 for g in groups.values())
    ordinary = groups["x^2+x+T"]
    assert ordinary.profile_summary["H"] == 1 and ordinary.profile_summary["ordinary"]
    supersingular = groups["x^2+T"]
    assert supersingular.profile_summary["H"] == 2


def test_partition_sizes_and_orbit_divisibility():
    f4 = get_tower("f4")
    groups = census_isomorphism_classes(f4, 2, f4.zero)
    total = sum(c.size for g in groups.values() for c in g.iso_classes)
    assert total == 4 * 3  # q^n * (q^n - 1)
    units = f4.q**f4.n - 1
    for g in groups.values():
        for c in g.iso_classes:
            assert units % c.size == 0


def test_orbit_key_is_invariant_under_twist():
    f4 = get_tower("f4")
    phi = DrinfeldModule(f4, SkewPoly(f4, [f4.zero, f4.gen(), f4.one]))
    key = twist_orbit_key(phi)
    for c in f4.elements():
        if c:
            assert twist_orbit_key(phi.twist(c)) == key


def test_acted_module_stays_in_isogeny_class():
    f4 = get_tower("f4")
    phi = DrinfeldModule(f4, SkewPoly(f4, [f4.zero, f4.gen(), f4.one]))
    end = endomorphism_ring(phi)
    for ideal in integral_ideals(end, 2):
        assert same_isogeny_class(phi, act(phi, ideal).image)


def test_census_size_guard():
    f16 = get_tower("f16")
    with pytest.raises(TooLarge):
        list(enumerate_modules(f16, 99, f16.zero))


def test_census_records_deterministic():
    f2 = get_tower("f2")
    recs1 = census_records(f2, 2, f2.zero)
    recs2 = census_records(f2, 2, f2.zero)
    assert [dumps_canonical(r) for r in recs1] == [dumps_canonical(r) for r in recs2]
    assert all(r["record"] == "class" for r in recs1)
    assert {r["m"] for r in recs1} == {"x^2+T", "x^2+x+T"}
    supers = next(r for r in recs1 if r["m"] == "x^2+T")
    assert supers["end"]["gorenstein"] is None  # inseparable: undecided
    ordinary = next(r for r in recs1 if r["m"] == "x^2+x+T")
    assert ordinary["end"]["gorenstein"] is True
    assert ordinary["end"]["is_minimal"]


def test_minimal_order_occurrence_negative_case():
    # the intermediate class over F_4 (H=2, d=1 < n): minimal order never occurs
    f4 = get_tower("f4")
    groups = census_isomorphism_classes(f4, 2, f4.zero)
    grp = groups["x^2+T*x+T^2"]
    report = validate_minimal_order_occurrence(grp)
    assert report["occurs"] is False and report["expected"] is False


def test_ideal_class_action_bijective_on_f4_ordinary():
    f4 = get_tower("f4")
    groups = census_isomorphism_classes(f4, 2, f4.zero)
    grp = groups["x^2+(T+1)*x+T^2"]
    report = validate_ideal_class_action(grp, f4)
    assert report["bijective"] and report["saturated"]
    assert report["ideal_classes"] == report["iso_classes"] == 2

"""Acceptance gate: every criterion below is exercised at its stated bound
and prints one PASS line; any failure is a hard assert.

The enumeration fixture walks, per configuration, every element up to the
length bound and computes the full three-route dimension report; the
criteria then interrogate those shared results.
"""

import pytest

from adlv import cartan as ca
from adlv import classes as cl
from adlv.demazure import dem_limit
from adlv.dims import dim_generic
from adlv.errors import VerificationError
from adlv.hecke0 import cocenter_image

from _oracles import bfs_lengths
from _properties import (
    check_bruhat_poset,
    check_conjugation_invariance,
    check_dem_associativity_exhaustive,
    check_dem_associativity_sampled,
    check_dem_monotonicity,
    check_preceq_well_defined,
)
from conftest import get_group

# (config, sigma, max length) for the main enumeration
ENUM_CONFIGS = [
    ("type=A1;lattice=coroot", "id", 12),
    ("type=A1;lattice=coweight", "id", 12),
    ("type=A2;lattice=coroot", "id", 8),
    ("type=A2;lattice=coroot", "swap(1,2)", 8),
    ("type=A2;lattice=coweight", "id", 8),
    ("type=A2;lattice=coweight", "swap(1,2)", 8),
    ("type=C2;lattice=coroot", "id", 8),
    ("type=C2;lattice=coweight", "id", 8),
    ("type=G2;lattice=coroot", "id", 8),
]


@pytest.fixture(scope="module")
def enumeration():
    """config -> (group, sigma, reports, bruhat_errors) over the full sweep."""
    out = {}
    for config, sigma_desc, max_len in ENUM_CONFIGS:
        g = get_group(config)
        sigma = g.parse_sigma(sigma_desc)
        reports, errors = [], []
        for w in g.elements_upto(max_len):
            try:
                reports.append(dim_generic(w, sigma, strict=False))
            except VerificationError as exc:
                errors.append((w, exc))
        out[(config, sigma_desc)] = (g, sigma, reports, errors)
    return out


def test_criterion_1_three_way_agreement(enumeration):
    total = 0
    for (config, sigma_desc), (_, _, reports, _) in enumeration.items():
        for r in reports:
            assert r.dim_demazure is not None, f"{config} {sigma_desc}: no Demazure limit for {r.w!r}"
            assert r.agree and r.dim_reduction == r.dim_bruhat == r.dim_demazure, (
                f"{config} sigma={sigma_desc}: routes disagree at {r.w!r}"
            )
        total += len(reports)
    assert total > 1000
    print(f"\nACCEPTANCE 1 (three-way dimension agreement): PASS [{total} elements, {len(ENUM_CONFIGS)} configs]")


def test_criterion_2_bruhat_unique_maximum(enumeration):
    for (config, sigma_desc), (_, _, _, errors) in enumeration.items():
        assert not errors, f"{config} sigma={sigma_desc}: unique-maximum failures {errors[:3]}"
    print("ACCEPTANCE 2 (Bruhat route unique maximum): PASS [no failures raised]")


def test_criterion_3_cocenter_image(enumeration):
    total = 0
    for (config, sigma_desc), (g, sigma, reports, _) in enumeration.items():
        for r in reports:
            img = cocenter_image(r.w, sigma)
            alt = cocenter_image(r.w, sigma, tie_break="revlex")
            assert img.class_invariant == r.generic_invariant, f"{config}: invariant mismatch at {r.w!r}"
            expected_sign = -1 if (r.length_w - img.rep.length()) % 2 else 1
            assert img.sign == expected_sign
            assert (img.sign, img.rep.length(), img.class_invariant) == (
                alt.sign,
                alt.rep.length(),
                alt.class_invariant,
            ), f"{config}: tie-breaking changed the cocenter image at {r.w!r}"
            total += 1
    print(f"ACCEPTANCE 3 (cocenter image, sign, path independence): PASS [{total} elements]")


def test_criterion_4_straightness_criterion_equivalence():
    total = 0
    for config, sigma_desc, max_len in ENUM_CONFIGS:
        g = get_group(config)
        sigma = g.parse_sigma(sigma_desc)
        for w in g.elements_upto(min(max_len, 8)):
            m = cl.newton_exponent(w, sigma)
            definitional = all(
                g.twisted_power(w, n, sigma).length() == n * w.length() for n in range(1, 2 * m + 1)
            )
            assert cl.is_straight(w, sigma) == definitional, f"{config} sigma={sigma_desc}: mismatch at {w!r}"
            total += 1
    print(f"ACCEPTANCE 4 (straightness criterion equivalence, l<=8): PASS [{total} elements]")


def test_criterion_5_length_formula_vs_cayley_bfs():
    total = 0
    seen = set()
    for config, _, _ in ENUM_CONFIGS:
        if config in seen:
            continue
        seen.add(config)
        g = get_group(config)
        dist = bfs_lengths(g, 6)
        enumerated = {w.raw for w in g.elements_upto(6)}
        assert enumerated == set(dist), f"{config}: enumeration and BFS disagree on the element set"
        for raw, d in dist.items():
            assert g.kernel.length(*raw) == d, f"{config}: closed formula != BFS distance at {raw}"
        total += len(dist)
    print(f"ACCEPTANCE 5 (closed-form length == Cayley BFS, l<=6): PASS [{total} elements]")


def test_criterion_6_demazure_stabilization(enumeration):
    total = 0
    for (config, sigma_desc), (g, sigma, reports, _) in enumeration.items():
        for r in reports:
            trace = dem_limit(r.w, sigma, horizon_max=80, stop_early=False)
            assert trace.limit is not None and not trace.periodic
            assert trace.stabilized_at is not None and trace.stabilized_at <= 50, (
                f"{config}: stabilization at {trace.stabilized_at} > 50 for {r.w!r}"
            )
            assert trace.limit == r.len_Ow, f"{config}: limit {trace.limit} != l(generic class) {r.len_Ow}"
            bound = abs(trace.length_at(trace.stabilized_at) - trace.stabilized_at * r.len_Ow)
            for n in range(trace.stabilized_at, trace.horizon + 1):
                assert abs(trace.length_at(n) - n * r.len_Ow) <= bound, (
                    f"{config}: deviation exceeded its stabilization value at {r.w!r}, n={n}"
                )
            total += 1
    print(f"ACCEPTANCE 6 (Demazure stabilization <= 50, bounded deviation): PASS [{total} traces]")


def test_criterion_7_golden_values():
    a1 = get_group("type=A1;lattice=coroot")
    sid = a1.auto()
    assert dim_generic(a1.parse("s1"), sid).dim == 1
    assert dim_generic(a1.parse("s0 s1"), sid).dim == 0
    assert dim_generic(a1.parse("s1 s0 s1"), sid).dim == 1
    nu = cl.class_invariant(a1.parse("s0 s1"), sid).nu.nu
    assert nu == ca.CoweightVec.from_ints([1])  # alpha_1^vee in coroot coordinates

    a1cw = get_group("type=A1;lattice=coweight")
    pi = a1cw.omega_gen(1)
    assert a1cw.mul(pi, pi) == a1cw.identity
    inv_pi = cl.class_invariant(pi, a1cw.auto())
    assert not inv_pi.kappa.is_trivial()
    assert inv_pi.nu.is_zero()

    a2cw = get_group("type=A2;lattice=coweight")
    sw = a2cw.parse_sigma("swap(1,2)")
    assert dim_generic(a2cw.simple_refl(1), sw).dim == 1
    from adlv.demazure import dem_twisted_power

    stable = a2cw.from_word([1, 2, 1])
    assert all(dem_twisted_power(a2cw.simple_refl(1), n, sw) == stable for n in (3, 4, 7))
    print("ACCEPTANCE 7 (golden values): PASS")


def test_criterion_8_property_suites():
    a1 = get_group("type=A1;lattice=coroot")
    a1cw = get_group("type=A1;lattice=coweight")
    a2 = get_group("type=A2;lattice=coroot")
    a2cw = get_group("type=A2;lattice=coweight")

    counts = {
        "dem assoc A1 exhaustive l<=4": check_dem_associativity_exhaustive(a1, 4),
        "dem assoc A2 sampled 10^4 l<=6": check_dem_associativity_sampled(a2, 6, 10_000),
        "dem monotone A1 l<=5": check_dem_monotonicity(a1, 5),
        "dem monotone A2 l<=5": check_dem_monotonicity(a2, 5),
        "bruhat poset A1 l<=6": check_bruhat_poset(a1, 6),
        "bruhat poset A1cw l<=6": check_bruhat_poset(a1cw, 6),
        "bruhat poset A2 l<=6": check_bruhat_poset(a2, 6),
        "bruhat poset A2cw l<=6": check_bruhat_poset(a2cw, 6),
        "conj invariance A1cw id": check_conjugation_invariance(a1cw, a1cw.auto(), 3, 5),
        "conj invariance A1cw ad:pi1": check_conjugation_invariance(a1cw, a1cw.parse_sigma("ad:pi1"), 3, 5),
        "conj invariance A2cw swap (sampled)": check_conjugation_invariance(
            a2cw, a2cw.parse_sigma("swap(1,2)"), 3, 5, sample=400
        ),
        "preceq well-defined A1cw": check_preceq_well_defined(a1cw.auto(), 6),
        "preceq well-defined A2": check_preceq_well_defined(a2.auto(), 6),
    }
    assert all(n > 0 for n in counts.values())
    print("ACCEPTANCE 8 (monoid/order property suites): PASS " + str(sum(counts.values())) + " cases")

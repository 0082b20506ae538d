import pytest

from agr_lab.errors import NoStabilization, NotIntegral
from agr_lab.semigroup import NumericalSemigroup, ideal_from_generators, semigroup_from_generators
from agr_lab.semigroup_rings import (
    NotAChain,
    SymmetryKind,
    almost_symmetric_family,
    canonical_ideal,
    classify_local,
    hilbert_coeffs,
    is_almost_symmetric,
    oversemigroup_chain,
    oversemigroups,
    pseudo_symmetric_family,
    shifted_canonical_ideal,
    symmetry_class,
)

from enumerators import power_lengths_oracle, semigroups_by_gap_subsets


def sg(*gens):
    return semigroup_from_generators(gens)


def window(H):
    return H.frobenius + 3 * max(H.generators) + 5


def canonical_oracle(H):
    """K(H) evaluated pointwise."""
    F = H.frobenius
    return {x for x in range(-10, window(H)) if (F - x) not in H}


def mk_in_h_oracle(H):
    """M + K ⊆ H checked on every element pair up to the conductor window."""
    top = window(H)
    M = [m for m in range(1, top) if m in H]
    K = canonical_oracle(H)
    return all((m + k) in H for m in M for k in K)


def pairing_symmetric(H):
    F = H.frobenius
    return all((x in H) != ((F - x) in H) for x in range(F + 1))


@pytest.mark.parametrize(
    "gens, excess, ideal_gens",
    [((3, 4, 5), [1], (0, 1)), ((4, 6, 11, 13), [2, 7], (0, 2, 7)), ((3, 4), [], (0,))],
)
def test_canonical_ideal_examples(gens, excess, ideal_gens):
    H = sg(*gens)
    K = canonical_ideal(H)
    assert K.generators == ideal_gens
    elems = {x for x in range(-10, window(H)) if x in K}
    assert elems == canonical_oracle(H)
    assert sorted(x for x in elems if x not in H) == excess


def test_canonical_ideal_sandwich(semigroups_f15):
    for H in semigroups_f15:
        K = canonical_ideal(H)
        assert all(h in K for h in range(window(H)) if h in H)
        assert all(x >= 0 for x in range(-10, 0) if x in K) and K.min_value == 0


@pytest.mark.parametrize(
    "gens, kind, t",
    [
        # F = 6 is even and type 2, so this is pseudo-symmetric
        ((4, 5, 7), SymmetryKind.PSEUDO_SYMMETRIC, 2),
        ((5, 7, 9), SymmetryKind.NONE, 2),
        ((3, 4), SymmetryKind.SYMMETRIC, 1),
        ((4, 6, 11, 13), SymmetryKind.ALMOST_SYMMETRIC_PROPER, 3),
        ((1,), SymmetryKind.SYMMETRIC, 1),
    ],
)
def test_symmetry_class_examples(gens, kind, t):
    sc = symmetry_class(sg(*gens))
    assert sc.kind is kind
    assert sc.type == t


def test_five_seven_nine_fails_numeric_identity():
    H = sg(5, 7, 9)
    assert 2 * H.genus == 16
    assert H.frobenius + H.type == 15
    assert not mk_in_h_oracle(H)


def test_symmetry_class_laws(semigroups_f15):
    for H in semigroups_f15:
        sc = symmetry_class(H)
        K = canonical_ideal(H)
        sym = sc.kind is SymmetryKind.SYMMETRIC
        assert sym == (K == ideal_from_generators(H, [0])) == (sc.type == 1) == pairing_symmetric(H)
        if sc.kind is SymmetryKind.PSEUDO_SYMMETRIC:
            assert sc.type == 2
        if sc.kind is SymmetryKind.ALMOST_SYMMETRIC_PROPER:
            assert sc.type >= 2
        assert sc.almost_symmetric == mk_in_h_oracle(H)


def test_almost_symmetric_type_two_is_pseudo_symmetric(semigroups_f15):
    for H in semigroups_f15:
        sc = symmetry_class(H)
        if sc.almost_symmetric and sc.type == 2:
            assert sc.kind is SymmetryKind.PSEUDO_SYMMETRIC
            assert H.frobenius % 2 == 0


@pytest.mark.parametrize(
    "gens, ag, gor, t, pseudo",
    [
        ((3, 4, 5), True, False, 2, True),
        ((3, 5, 7), True, False, 2, True),
        ((4, 6, 11, 13), True, False, 3, False),
        ((5, 7, 9), False, False, 2, False),
        ((3, 4), True, True, 1, True),
        ((1,), True, True, 1, True),
    ],
)
def test_classify_local_examples(gens, ag, gor, t, pseudo):
    H = sg(*gens)
    r = classify_local(H)
    assert r.almost_gorenstein is ag
    assert r.gorenstein is gor
    assert r.cm_type == t
    assert r.pseudo_gorenstein is pseudo
    assert r.krull_dim == 1 and r.cohen_macaulay is True
    assert r.multiplicity == min(gens) and r.embedding_dim == len(gens)
    assert any("infinite residue field" in n for n in r.notes)


def test_families():
    for a in range(4, 9):
        for ell in range(2, 5):
            H = almost_symmetric_family(a, ell)
            assert H.type == a - 2
            assert is_almost_symmetric(H)
    for a in range(4, 10):
        H = pseudo_symmetric_family(a)
        assert H.type == 2
        assert symmetry_class(H).kind is SymmetryKind.PSEUDO_SYMMETRIC
    assert almost_symmetric_family(4, 2) == sg(4, 7, 9)
    assert pseudo_symmetric_family(4) == sg(4, 5, 7)


@pytest.mark.parametrize("gens", [(3, 4, 5), (4, 5, 7), (4, 6, 11, 13), (3, 5, 7), (5, 6, 7, 8, 9)])
def test_shifted_canonical_coefficients(gens):
    H = sg(*gens)
    E, shift = shifted_canonical_ideal(H)
    assert shift % H.multiplicity == 0
    assert E.is_integral() and 0 not in E
    c = hilbert_coeffs(H, E, 12)
    L = power_lengths_oracle(H, E.generators, 13)
    n = 12
    assert c.e0 == L[n] - L[n - 1]
    assert c.e1 == c.e0 * (n + 1) - L[n]
    assert c.e1 == H.type
    assert c.reduction_number == 2


def test_three_four_five_numbers():
    H = sg(3, 4, 5)
    E = ideal_from_generators(H, [3, 4])
    assert power_lengths_oracle(H, [3, 4], 4) == [2, 4, 7, 10]
    assert hilbert_coeffs(H, E, 10) == (3, 2, 2)


@pytest.mark.parametrize("gens", [(3, 4, 5), (2, 7), (5, 7, 9)])
def test_principal_ideal(gens):
    H = sg(*gens)
    m = H.multiplicity
    assert hilbert_coeffs(H, ideal_from_generators(H, [m]), 5) == (m, 0, 0)


def test_hilbert_errors():
    H = sg(3, 4, 5)
    with pytest.raises(NotIntegral):
        hilbert_coeffs(H, canonical_ideal(H), 5)
    with pytest.raises(NotIntegral):
        hilbert_coeffs(H, ideal_from_generators(H, [0]), 5)
    with pytest.raises(NotIntegral):
        hilbert_coeffs(H, ideal_from_generators(sg(2, 3), [2]), 5)
    with pytest.raises(ValueError):
        hilbert_coeffs(H, ideal_from_generators(H, [3]), 2)
    # reduction number 2 cannot be certified with a window of 3
    with pytest.raises(NoStabilization):
        hilbert_coeffs(H, ideal_from_generators(H, [3, 4]), 3)


def test_symmetric_canonical_is_principal(semigroups_f15):
    for H in semigroups_f15:
        if symmetry_class(H).kind is SymmetryKind.SYMMETRIC:
            E, shift = shifted_canonical_ideal(H)
            assert hilbert_coeffs(H, E, 6) == (shift, 0, 0)


def brute_oversemigroups(H):
    gaps = list(H.gaps)
    out = set()
    for bits in range(1 << len(gaps)):
        keep = frozenset(g for i, g in enumerate(gaps) if not bits >> i & 1)
        top = max(keep, default=0)
        elems = [x for x in range(1, top + 1) if x not in keep]
        if all(a + b not in keep for a in elems for b in elems if a + b <= top):
            out.add(tuple(sorted(keep)))
    return out


def test_oversemigroup_examples():
    names = lambda L: [S.generators for S in L]
    assert names(oversemigroups(sg(3, 4))) == [(3, 4), (3, 4, 5), (2, 3), (1,)]
    assert names(oversemigroups(sg(3, 5))) == [(3, 5), (3, 5, 7), (3, 4, 5), (2, 3), (1,)]
    assert names(oversemigroups(sg(3, 4, 5))) == [(3, 4, 5), (2, 3), (1,)]
    assert names(oversemigroups(sg(1))) == [(1,)]


def test_oversemigroups_match_brute_force(semigroups_f15):
    for H in semigroups_f15[::7]:
        over = oversemigroups(H)
        assert {S.gaps for S in over} == brute_oversemigroups(H)
        genera = [S.genus for S in over]
        assert genera == sorted(genera, reverse=True)
        assert over[0] == H and over[-1].is_full()


def test_oversemigroups_closed_under_intersection(semigroups_f15):
    for H in semigroups_f15[::11]:
        over = oversemigroups(H)
        gapsets = {frozenset(S.gaps) for S in over}
        for A in over:
            for B in over:
                # intersection of semigroups has the union of gaps
                assert frozenset(A.gaps) | frozenset(B.gaps) in gapsets
            for x in A.gaps:
                try:
                    T = NumericalSemigroup.from_gaps(set(A.gaps) - {x})
                except ValueError:
                    continue
                assert frozenset(T.gaps) in gapsets


def test_chain_examples():
    chain = oversemigroup_chain(sg(2, 9))
    assert [S.generators for S in chain] == [(2, 9), (2, 7), (2, 5), (2, 3), (1,)]
    assert oversemigroup_chain(sg(1)) == [sg(1)]
    assert len(oversemigroup_chain(sg(3, 4, 5))) == 3


def test_not_a_chain():
    res = oversemigroup_chain(sg(3, 5))
    assert not isinstance(res, NotAChain)
    res = oversemigroup_chain(sg(4, 5, 6, 7))
    assert isinstance(res, NotAChain)
    assert not res.first.issubset(res.second) and not res.second.issubset(res.first)


def test_multiplicity_two_chains():
    for ell in range(0, 9):
        chain = oversemigroup_chain(sg(2, 2 * ell + 1))
        assert len(chain) == ell + 1
        assert [S.generators for S in chain][:-1] == [(2, 2 * q + 1) for q in range(ell, 0, -1)]


def test_gap_subset_enumeration_agrees_with_tree(semigroups_f15):
    assert {frozenset(H.gaps) for H in semigroups_f15} == set(semigroups_by_gap_subsets(15))

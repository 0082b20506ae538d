"""Ring-theoretic verdicts for semigroup rings ``k[[t^H]]``.

Everything is decided on the exponent semigroup: the canonical ideal is
``K(H) = {x : F(H) - x not in H}`` and the almost Gorenstein property of the
ring is the inclusion ``M + K ⊆ H`` with ``M = H \\ {0}``.  Verdicts assume an
infinite residue field.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import InconsistencyError, NoStabilization, NotIntegral
from .report import SEMIGROUP_RING, ClassificationReport, pseudo_flag
from .semigroup import (
    NumericalSemigroup,
    RelativeIdeal,
    colength,
    ideal_from_generators,
    ideal_sum,
    pseudo_frobenius,
    semigroup_from_generators,
)

FIELD_NOTE = "infinite residue field assumed; finite-field exceptions not covered"


class SymmetryKind(enum.Enum):
    SYMMETRIC = "Symmetric"
    PSEUDO_SYMMETRIC = "PseudoSymmetric"
    ALMOST_SYMMETRIC_PROPER = "AlmostSymmetricProper"
    NONE = "None"


@dataclass(frozen=True)
class SymmetryClass:
    kind: SymmetryKind
    type: int

    @property
    def almost_symmetric(self) -> bool:
        return self.kind is not SymmetryKind.NONE


def canonical_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """The standard canonical ideal, normalized so that its minimum is 0."""
    F = H.frobenius
    extra = [x for x in H.gaps if (F - x) not in H]
    return ideal_from_generators(H, [0] + extra)


def canonical_excess(H: NumericalSemigroup) -> list[int]:
    """Elements of ``K(H) \\ H``; it is empty exactly when ``H`` is symmetric."""
    F = H.frobenius
    return [x for x in H.gaps if (F - x) not in H]


def is_almost_symmetric(H: NumericalSemigroup) -> bool:
    # M + K ⊆ H reduces to generators of M against the finite set K \ H
    excess = canonical_excess(H)
    return all((g + k) in H for g in H.generators for k in excess)


def symmetry_class(H: NumericalSemigroup) -> SymmetryClass:
    t = len(pseudo_frobenius(H))
    if not canonical_excess(H):
        return SymmetryClass(SymmetryKind.SYMMETRIC, t)
    if not is_almost_symmetric(H):
        return SymmetryClass(SymmetryKind.NONE, t)
    if t == 2 and H.frobenius % 2 == 0:
        return SymmetryClass(SymmetryKind.PSEUDO_SYMMETRIC, t)
    return SymmetryClass(SymmetryKind.ALMOST_SYMMETRIC_PROPER, t)


def classify_local(H: NumericalSemigroup) -> ClassificationReport:
    sc = symmetry_class(H)
    # numerical characterization, computed independently of M + K ⊆ H
    numeric = 2 * H.genus == H.frobenius + sc.type
    if numeric != sc.almost_symmetric:
        raise InconsistencyError(
            f"{H}: M+K test says {sc.almost_symmetric}, 2g = F + t says {numeric}"
        )
    gorenstein = sc.kind is SymmetryKind.SYMMETRIC
    if gorenstein != (sc.type == 1):
        raise InconsistencyError(f"{H}: K = H disagrees with type {sc.type}")

    notes = []
    if gorenstein:
        notes.append("symmetric: K(H) = H, Gorenstein")
    elif sc.almost_symmetric:
        notes.append(f"M + K inside H ({sc.kind.value}): almost Gorenstein")
    else:
        notes.append("M + K not inside H: not almost Gorenstein")
    notes.append(FIELD_NOTE)
    return ClassificationReport(
        kind=SEMIGROUP_RING,
        input=str(H),
        krull_dim=1,
        multiplicity=H.multiplicity,
        embedding_dim=H.embedding_dimension,
        cohen_macaulay=True,
        gorenstein=gorenstein,
        almost_gorenstein=sc.almost_symmetric,
        pseudo_gorenstein=pseudo_flag(sc.almost_symmetric, sc.type),
        cm_type=sc.type,
        a_invariant=None,
        level=None,
        notes=tuple(notes),
    )


def shifted_canonical_ideal(H: NumericalSemigroup) -> tuple[RelativeIdeal, int]:
    """Translate of ``K(H)`` by the least positive multiple of the
    multiplicity that lands it inside ``H \\ {0}``; returns ``(ideal, shift)``."""
    K = canonical_ideal(H)
    m = H.multiplicity
    s = m
    while not (K + s).is_integral():
        s += m
    return K + s, s


class HilbertCoefficients(NamedTuple):
    e0: int
    e1: int
    reduction_number: int


STABLE_WINDOW = 3


def hilbert_function(H: NumericalSemigroup, E: RelativeIdeal, max_n: int) -> list[int]:
    """``[colength(H, E^(n+1)) for n in 0..max_n]``."""
    one = ideal_from_generators(H, [0])
    out = []
    P = E
    for _ in range(max_n + 1):
        out.append(colength(one, P))
        P = ideal_sum(P, E)
    return out


def hilbert_coeffs(H: NumericalSemigroup, E: RelativeIdeal, max_n: int = 10) -> HilbertCoefficients:
    """Hilbert coefficients and reduction number of an integral ideal at d = 1.

    ``colength(H, E^(n+1))`` is eventually ``e0*(n+1) - e1``.  The reduction
    is generated by ``min(E)``.
    """
    if max_n < STABLE_WINDOW:
        raise ValueError(f"max_n must be at least {STABLE_WINDOW}")
    if E.base != H:
        raise NotIntegral(f"{E} is not an ideal of {H}")
    if not E.is_integral():
        raise NotIntegral(f"{E} is not contained in {H}")
    if 0 in E:
        raise NotIntegral(f"{E} is the unit ideal")

    L = hilbert_function(H, E, max_n)
    diffs = [L[n] - L[n - 1] for n in range(1, max_n + 1)]
    tail = diffs[-STABLE_WINDOW:]
    if len(set(tail)) != 1:
        raise NoStabilization(f"differences {diffs} not constant by n = {max_n}")
    e0 = tail[0]
    e1 = e0 * (max_n + 1) - L[max_n]

    a = E.min_value
    power = ideal_from_generators(H, [0])
    red = None
    for r in range(max_n + 1):
        nxt = ideal_sum(power, E)
        if nxt == power + a:
            red = r
            break
        power = nxt
    if red is None:
        raise NoStabilization(f"no reduction number <= {max_n}")
    if red > max_n - STABLE_WINDOW + 1 or e0 != a:
        raise InconsistencyError(
            f"{E}: e0 = {e0}, reduction {a}, reduction number {red}, window {max_n}"
        )
    return HilbertCoefficients(e0, e1, red)


def _special_gaps(S: NumericalSemigroup) -> list[int]:
    # gaps x with S ∪ {x} again a semigroup
    return [x for x in pseudo_frobenius(S) if x > 0 and 2 * x in S]


def oversemigroups(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Every numerical semigroup containing ``H``, by genus descending.

    Any ``T ⊋ S`` contains ``S ∪ {max(T \\ S)}``, which is a semigroup, so a
    search that adjoins one special gap at a time reaches all of them.
    """
    seen = {H.gaps: H}
    queue = deque([H])
    while queue:
        S = queue.popleft()
        for x in _special_gaps(S):
            gaps = tuple(g for g in S.gaps if g != x)
            if gaps not in seen:
                T = NumericalSemigroup.from_gaps(gaps)
                seen[gaps] = T
                queue.append(T)
    return sorted(seen.values(), key=lambda S: (-S.genus, S.generators))


@dataclass(frozen=True)
class NotAChain:
    first: NumericalSemigroup
    second: NumericalSemigroup

    def __str__(self) -> str:
        return f"not a chain: {self.first} and {self.second} are incomparable"


def oversemigroup_chain(H: NumericalSemigroup) -> Union[list[NumericalSemigroup], NotAChain]:
    """The oversemigroups of ``H`` as a chain ``H ⊂ ... ⊂ N``, if they form one."""
    over = oversemigroups(H)
    for i, S in enumerate(over):
        for T in over[i + 1:]:
            if not S.issubset(T):
                return NotAChain(S, T)
    if H.multiplicity == 2 and len(over) != H.genus + 1:
        raise InconsistencyError(f"{H}: chain of length {len(over)}, genus {H.genus}")
    return over


def almost_symmetric_family(a: int, ell: int) -> NumericalSemigroup:
    """``<a, a*ell - 1, a*ell + i (1 <= i <= a - 3)>``, of type ``a - 2``."""
    return semigroup_from_generators([a, a * ell - 1] + [a * ell + i for i in range(1, a - 2)])


def pseudo_symmetric_family(a: int) -> NumericalSemigroup:
    """``<a + i : 0 <= i <= a - 1, i != a - 2>``."""
    return semigroup_from_generators([a + i for i in range(a) if i != a - 2])

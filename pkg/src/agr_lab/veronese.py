"""Veronese subrings ``k[X_1..X_d]^(n)``: closed-form verdicts checked
against an independent Hilbert-series computation."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InconsistencyError
from .hilbert import HilbertNumerator, numerator_from_series, strip_zeros
from .report import VERONESE, ClassificationReport, pseudo_flag


@dataclass(frozen=True)
class VeroneseInstance:
    d: int
    n: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.n < 1:
            raise ValueError(f"need d >= 1 and n >= 1, got d={self.d}, n={self.n}")

    def __str__(self) -> str:
        return f"d={self.d},n={self.n}"


def veronese_h_numerator(v: VeroneseInstance) -> HilbertNumerator:
    """Numerator of the Hilbert series from ``dim R^(n)_m = C(mn+d-1, d-1)``."""
    d, n = v.d, v.n
    terms = 2 * d + 2
    values = [comb(m * n + d - 1, d - 1) for m in range(terms)]
    coeffs = numerator_from_series(values, d)
    # the numerator has degree < d; anything beyond is an engine fault
    if any(coeffs[d:]):
        raise InconsistencyError(f"{v}: numerator {coeffs} does not terminate below degree {d}")
    return HilbertNumerator(strip_zeros(coeffs), d)


def a_invariant_veronese(v: VeroneseInstance) -> int:
    return (-v.d) // v.n


def level_window(d: int, n: int) -> bool:
    """``-n(d-1) < -d < -n(d-2)``: the only a-invariant window compatible with
    a level ring of a-invariant ``1 - d``."""
    return -n * (d - 1) < -d < -n * (d - 2)


def closed_form_gorenstein(v: VeroneseInstance) -> bool:
    # d = 1 gives k[X^n], a polynomial ring
    return v.d == 1 or v.d % v.n == 0


def closed_form_almost_gorenstein(v: VeroneseInstance) -> bool:
    return v.d <= 2 or v.d % v.n == 0 or (v.d, v.n) == (3, 2)


def classify_veronese(v: VeroneseInstance) -> ClassificationReport:
    d, n = v.d, v.n
    h = veronese_h_numerator(v)
    a = a_invariant_veronese(v)
    if h.a_invariant != a:
        raise InconsistencyError(f"{v}: engine a = {h.a_invariant}, closed form a = {a}")
    if h.multiplicity != n ** (d - 1):
        raise InconsistencyError(f"{v}: engine multiplicity {h.multiplicity} != n^(d-1)")

    gorenstein = closed_form_gorenstein(v)
    almost = closed_form_almost_gorenstein(v)
    # Veronese rings are CM domains: Gorenstein iff the numerator is palindromic
    if h.is_palindromic() != gorenstein:
        raise InconsistencyError(f"{v}: h = {h.coeffs} palindromic disagrees with n | d")
    if (h.is_palindromic() or h.degree == 1) != almost:
        raise InconsistencyError(f"{v}: engine and closed form disagree on almost Gorenstein")

    notes = []
    if gorenstein:
        notes.append("polynomial ring in one variable" if d == 1 else "n | d: Gorenstein")
    elif d <= 2:
        notes.append("d <= 2: almost Gorenstein graded for every n")
    elif almost:
        notes.append("(d, n) = (3, 2): a = 1 - d window, almost Gorenstein graded")
    else:
        notes.append("d >= 3, n does not divide d, outside the (3, 2) window: not almost Gorenstein")

    level = None
    cm_type = 1 if gorenstein else None
    if a == 1 - d:
        level = True
        cm_type = max(h.coeffs[1], 1)
        notes.append("a = 1 - d: level ring")
    return ClassificationReport(
        kind=VERONESE,
        input=str(v),
        krull_dim=d,
        multiplicity=h.multiplicity,
        embedding_dim=comb(n + d - 1, d - 1),
        cohen_macaulay=True,
        gorenstein=gorenstein,
        almost_gorenstein=almost,
        pseudo_gorenstein=pseudo_flag(almost, cm_type),
        cm_type=cm_type,
        a_invariant=a,
        level=level,
        notes=tuple(notes),
    )

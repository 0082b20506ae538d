"""Hilbert numerators ``F(λ)`` of graded rings with series ``F(λ)/(1-λ)^d``."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


@dataclass(frozen=True)
class HilbertNumerator:
    coeffs: tuple[int, ...]
    krull_dim: int

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError("numerator must be nonzero with a nonzero top coefficient")
        if self.krull_dim < 0:
            raise ValueError("negative Krull dimension")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def a_invariant(self) -> int:
        return self.degree - self.krull_dim

    @property
    def multiplicity(self) -> int:
        return sum(self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def series(self, terms: int) -> list[int]:
        """First ``terms`` values of ``dim R_m``, expanding ``1/(1-λ)^d``."""
        d = self.krull_dim
        out = []
        for m in range(terms):
            out.append(sum(c * _inv_power_coeff(d, m - i) for i, c in enumerate(self.coeffs) if i <= m))
        return out


def _inv_power_coeff(d: int, k: int) -> int:
    # coefficient of λ^k in (1-λ)^(-d)
    if d == 0:
        return 1 if k == 0 else 0
    return comb(k + d - 1, d - 1)


def strip_zeros(coeffs: Sequence[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def numerator_from_series(values: Sequence[int], d: int) -> tuple[int, ...]:
    """Coefficients of ``(1-λ)^d * sum(values[m] λ^m)``, exact up to ``len(values)-1``."""
    out = []
    for k in range(len(values)):
        out.append(sum((-1) ** j * comb(d, j) * values[k - j] for j in range(min(k, d) + 1)))
    return tuple(out)

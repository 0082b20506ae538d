"""Cohen-Macaulay, Gorenstein and almost Gorenstein verdicts for ``k[Δ]``.

Stanley-Reisner rings are reduced, so their total quotient ring is a product
of fields and hence Gorenstein.  Under that hypothesis the graded ring is
almost Gorenstein with ``a = 1 - d`` automatically, and when ``a != 1 - d``
it is almost Gorenstein exactly when it is Gorenstein.
"""

from __future__ import annotations

from .complexes import (
    Q,
    Field,
    SimplicialComplex,
    _popcount,
    all_faces,
    h_vector,
    link_masks,
    reduced_betti,
)
from .errors import InconsistencyError
from .report import STANLEY_REISNER, ClassificationReport, pseudo_flag

REDUCED_NOTE = "k[Δ] is reduced, so Q(R) is a product of fields (Gorenstein)"


def _link_dim(link: list[int]) -> int:
    return max(_popcount(f) for f in link) - 1


def is_cohen_macaulay(c: SimplicialComplex, field: Field = Q) -> bool:
    """Reisner: every link (the empty face included) has vanishing reduced
    homology below its dimension."""
    if not c.pure:
        return False
    masks = c.facet_masks
    for face in all_faces(masks):
        link = link_masks(masks, face)
        top = _link_dim(link)
        betti = reduced_betti(link, field)
        # betti[0] is degree -1
        if any(betti[i + 1] for i in range(-1, top)):
            return False
    return True


def core_masks(facet_masks: tuple[int, ...]) -> list[int]:
    """Facets with every cone vertex (one lying in all facets) removed."""
    cone = facet_masks[0]
    for f in facet_masks[1:]:
        cone &= f
    return [f & ~cone for f in facet_masks]


def _is_homology_sphere(masks: list[int], field: Field) -> bool:
    for face in all_faces(masks):
        link = link_masks(masks, face)
        top = _link_dim(link)
        betti = reduced_betti(link, field)
        if betti != [0] * (top + 1) + [1]:
            return False
    return True


def is_gorenstein_sr(c: SimplicialComplex, field: Field = Q) -> bool:
    """``k[Δ]`` is Gorenstein iff the core of Δ is a homology sphere over the
    field in the link-wise sense."""
    return _is_homology_sphere(core_masks(c.facet_masks), field)


def classify_sr(c: SimplicialComplex, field: Field = Q) -> ClassificationReport:
    h = h_vector(c)
    d = h.krull_dim
    e = h.multiplicity
    n = c.n_vertices
    common = dict(
        kind=STANLEY_REISNER,
        input=f"{c} field={field}",
        krull_dim=d,
        multiplicity=e,
        embedding_dim=n,
    )
    if not is_cohen_macaulay(c, field):
        return ClassificationReport(
            cohen_macaulay=False,
            notes=("Reisner's criterion fails over " + str(field),),
            **common,
        )

    a = h.a_invariant
    if any(x < 0 for x in h.coeffs):
        raise InconsistencyError(f"{c}: CM over {field} but h-vector {h.coeffs} has a negative entry")
    # vertex-count identity: n = e + d - 1 exactly when deg h <= 1
    if (n == e + d - 1) != (h.degree <= 1):
        raise InconsistencyError(f"{c}: n = {n}, e = {e}, d = {d}, h = {h.coeffs}")
    sphere = is_gorenstein_sr(c, field)
    if sphere and not h.is_palindromic():
        raise InconsistencyError(f"{c}: Gorenstein but h-vector {h.coeffs} not palindromic")

    notes = [f"Reisner's criterion holds over {field}"]
    if a == 1 - d:
        if h.coeffs[1] != n - d:
            raise InconsistencyError(f"{c}: a = 1 - d but h_1 = {h.coeffs[1]} != n - d")
        gorenstein = h.coeffs[1] <= 1
        if gorenstein != sphere:
            raise InconsistencyError(f"{c}: h-vector and link criterion disagree on Gorenstein")
        cm_type = max(h.coeffs[1], 1)
        notes += [
            "a = 1 - d: level, almost Gorenstein graded (n = e + d - 1)",
            REDUCED_NOTE,
        ]
        return ClassificationReport(
            cohen_macaulay=True,
            gorenstein=gorenstein,
            almost_gorenstein=True,
            pseudo_gorenstein=pseudo_flag(True, cm_type),
            cm_type=cm_type,
            a_invariant=a,
            level=True,
            notes=tuple(notes),
            **common,
        )

    notes.append("a != 1 - d: almost Gorenstein iff Gorenstein")
    notes.append("Gorenstein: core is a homology sphere" if sphere else "core is not a homology sphere")
    notes.append(REDUCED_NOTE)
    cm_type = 1 if sphere else None
    return ClassificationReport(
        cohen_macaulay=True,
        gorenstein=sphere,
        almost_gorenstein=sphere,
        pseudo_gorenstein=pseudo_flag(sphere, cm_type),
        cm_type=cm_type,
        a_invariant=a,
        level=None,
        notes=tuple(notes),
        **common,
    )

"""Multidegree strands of the Koszul complex on a quotient of square-free ideals.

For a square-free multidegree a, the strand's chain group in homological
degree i is spanned by the basis elements m * e_F where m runs over the
quotient-poset monomials dividing a and F = supp(a) \\ supp(m) has size i.
The differential drops one variable j from F, sending m * e_F to
(m * x_j) * e_(F minus j) with sign (-1)^(p+1), where p is the 1-based
position of j inside supp(a) \\ supp(m) listed in increasing index order
(wedge factors are always taken in increasing order).  Dropped targets that
land in J simply vanish.

Depth is read off the scan over all square-free multidegrees: it equals
n minus the largest homological degree carrying nonzero strand homology.
Restricting the scan to square-free multidegrees relies on homology of such
quotients being concentrated there; the brute-force multidegree oracle in
the test suite validates that assumption empirically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InputError, InternalConsistencyError
from .linalg import RATIONALS, FieldSpec, SignMatrix, rank
from .monomials import Monomial, QuotientInstance, ideal_contains
from .poset import enumerate_quotient


def boundary_sign(f: Monomial, b: Monomial, ambient: Monomial) -> int:
    """Transition coefficient from basis monomial f to b inside the given strand.

    Zero unless f divides b with deg b = deg f + 1; otherwise (-1)^(p+1)
    where p is the position of the new variable of b in the increasing
    enumeration of supp(ambient) \\ supp(f).
    """
    if f.n != b.n or f.n != ambient.n:
        raise InputError("ambient mismatch between monomials")
    if f.mask & ~ambient.mask or b.mask & ~ambient.mask:
        raise InputError("monomials must divide the strand multidegree")
    diff = b.mask & ~f.mask
    if f.mask & ~b.mask or diff.bit_count() != 1:
        return 0
    comp = ambient.mask & ~f.mask
    pos = (comp & (diff - 1)).bit_count() + 1
    return 1 if pos % 2 else -1


@dataclass(frozen=True)
class StrandComplex:
    """The slice of the Koszul complex at one square-free multidegree.

    ``bases[i]`` lists the chain-degree-i basis monomials (the monomials of
    the quotient poset of degree deg(a) - i dividing a) in canonical order.
    ``boundary(i)`` is the matrix of the differential from chain degree i to
    i - 1, rows labelled by the target basis; shapes degrade to empty
    matrices outside the populated range.
    """

    multidegree: Monomial
    bases: tuple[tuple[Monomial, ...], ...]
    boundaries: tuple[SignMatrix, ...]

    def basis(self, i: int) -> tuple[Monomial, ...]:
        if 0 <= i < len(self.bases):
            return self.bases[i]
        return ()

    @property
    def is_empty(self) -> bool:
        return all(not row for row in self.bases)

    def chain_degrees(self) -> range:
        return range(len(self.bases))

    def boundary(self, i: int) -> SignMatrix:
        if 1 <= i < len(self.boundaries):
            return self.boundaries[i]
        return SignMatrix(
            rows=len(self.basis(i - 1)),
            cols=len(self.basis(i)),
            entries=tuple(() for _ in self.basis(i - 1)),
        )


def _boundary_matrix(a: Monomial, source: tuple[Monomial, ...], target: tuple[Monomial, ...]) -> SignMatrix:
    target_index = {m.mask: k for k, m in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    for q, f in enumerate(source):
        comp = a.mask & ~f.mask
        below = 0
        rem = comp
        while rem:
            bit = rem & -rem
            rem ^= bit
            k = target_index.get(f.mask | bit)
            if k is not None:
                rows[k][q] = 1 if below % 2 == 0 else -1
            below += 1
    return SignMatrix.from_rows(
        rows,
        cols=len(source),
        row_labels=tuple(str(m) for m in target),
        col_labels=tuple(str(m) for m in source),
    )


def build_strand(inst: QuotientInstance, a: Monomial) -> StrandComplex:
    """Assemble the strand at multidegree a: bases and boundary matrices.

    The chain-degree-i basis consists exactly of the quotient-poset monomials
    of degree deg(a) - i dividing a.  An empty strand (all bases empty) is a
    valid result.
    """
    if a.n != inst.n:
        raise InputError(f"multidegree has ambient n={a.n}, instance has n={inst.n}")
    layers = enumerate_quotient(inst)
    size = a.degree
    bases = tuple(
        tuple(m for m in layers.layer(size - i) if m.mask & ~a.mask == 0)
        for i in range(size + 1)
    )
    boundaries = [SignMatrix(rows=0, cols=len(bases[0]), entries=())]
    for i in range(1, size + 1):
        boundaries.append(_boundary_matrix(a, bases[i], bases[i - 1]))
    return StrandComplex(multidegree=a, bases=bases, boundaries=tuple(boundaries))


def _strand_homology_from_ranks(strand: StrandComplex, ranks: Sequence[int]) -> dict[int, int]:
    dims: dict[int, int] = {}
    for i in strand.chain_degrees():
        r_i = len(strand.basis(i))
        if r_i == 0:
            continue
        out_rank = ranks[i]
        in_rank = ranks[i + 1] if i + 1 < len(ranks) else 0
        dim = r_i - out_rank - in_rank
        if dim < 0:
            raise InternalConsistencyError(
                f"negative homology dimension {dim} at {strand.multidegree}, chain degree {i}"
            )
        dims[i] = dim
    return dims


def _boundary_ranks(strand: StrandComplex, field: FieldSpec) -> list[int]:
    # ranks[i] = rank of the boundary from chain degree i to i-1; index 0 is the zero map.
    top = len(strand.bases) - 1
    ranks = [0] * (top + 2)
    for i in range(1, top + 1):
        if strand.basis(i) and strand.basis(i - 1):
            ranks[i] = rank(strand.boundary(i), field)
    return ranks


def strand_homology(inst: QuotientInstance, a: Monomial, field: FieldSpec = RATIONALS) -> dict[int, int]:
    """Homology dimension per chain degree with nonempty basis: r - rank(in) - rank(out)."""
    strand = build_strand(inst, a)
    return _strand_homology_from_ranks(strand, _boundary_ranks(strand, field))


@dataclass(frozen=True)
class HomologyProfile:
    """Nonzero strand homology dimensions, keyed by (multidegree, chain degree)."""

    per_strand: tuple[tuple[Monomial, int, int], ...]
    max_nonzero: int


def all_strands(inst: QuotientInstance) -> Iterator[StrandComplex]:
    """All nonempty strands, by multidegree mask ascending.  Deterministic."""
    for mask in range(1 << inst.n):
        a = Monomial(inst.n, mask)
        if not ideal_contains(inst.ideal_i, a):
            continue
        strand = build_strand(inst, a)
        if not strand.is_empty:
            yield strand


def homology_profile(inst: QuotientInstance, field: FieldSpec = RATIONALS) -> HomologyProfile:
    """Full (debug) scan: every nonzero homology dimension of every strand."""
    entries = []
    max_nonzero = -1
    for strand in all_strands(inst):
        dims = _strand_homology_from_ranks(strand, _boundary_ranks(strand, field))
        for i, dim in sorted(dims.items()):
            if dim:
                entries.append((strand.multidegree, i, dim))
                max_nonzero = max(max_nonzero, i)
    if max_nonzero < 0:
        raise InternalConsistencyError("no nonzero strand homology found; quotient should be nonzero")
    return HomologyProfile(per_strand=tuple(entries), max_nonzero=max_nonzero)


def exact_depth_multi(inst: QuotientInstance, fields: Sequence[FieldSpec]) -> dict[FieldSpec, int]:
    """Exact depth over several fields in one scan of the square-free multidegrees.

    For each field, depth = n - max{i : some strand has nonzero homology in
    chain degree i}.  A strand at multidegree a has chain degrees at most
    deg(a) - d, which prunes the scan: once every field's running maximum
    reaches that bound, the remaining (smaller) multidegrees cannot raise it.
    """
    field_list = list(dict.fromkeys(fields))
    if not field_list:
        raise InputError("need at least one field")
    n, d = inst.n, inst.d
    best = {f: -1 for f in field_list}
    by_size: dict[int, list[int]] = {}
    for mask in range(1 << n):
        by_size.setdefault(mask.bit_count(), []).append(mask)
    for size in range(n, 0, -1):
        bound = size - d
        if bound <= min(best.values()):
            break
        for mask in by_size.get(size, ()):
            a = Monomial(n, mask)
            if not ideal_contains(inst.ideal_i, a):
                continue
            strand = build_strand(inst, a)
            if strand.is_empty:
                continue
            for f in field_list:
                if bound <= best[f]:
                    continue
                dims = _strand_homology_from_ranks(strand, _boundary_ranks(strand, f))
                nonzero = [i for i, dim in dims.items() if dim]
                if nonzero:
                    best[f] = max(best[f], max(nonzero))
    for f, top in best.items():
        if top < 0:
            raise InternalConsistencyError("empty homology scan on a validated instance")
    return {f: n - top for f, top in best.items()}


def exact_depth(inst: QuotientInstance, field: FieldSpec = RATIONALS) -> int:
    """Exact depth of the quotient over the given coefficient field."""
    return exact_depth_multi(inst, (field,))[field]

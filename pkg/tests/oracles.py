"""Independent brute-force oracles used by the test suite only.

These deliberately avoid the package's strand builder and partition search:
the multidegree oracle works on arbitrary exponent vectors (not just
square-free ones) and the partition oracle enumerates every interval
partition outright.
"""

from __future__ import annotations

from itertools import combinations, product

from sqfdepth import Monomial, QuotientInstance, poset_elements
from sqfdepth.linalg import FieldSpec, rank_bareiss, rank_gf2, rank_mod_p


def general_member(gens: list[Monomial], exponents: tuple[int, ...]) -> bool:
    """Membership of the (possibly non-square-free) monomial x^exponents."""
    support = 0
    for j, e in enumerate(exponents):
        if e:
            support |= 1 << j
    return any(g.mask & ~support == 0 for g in gens)


def brute_quotient_member(inst: QuotientInstance, exponents: tuple[int, ...]) -> bool:
    return general_member(list(inst.ideal_i.generators), exponents) and not general_member(
        list(inst.ideal_j.generators), exponents
    )


def _raw_rank(entries, field: FieldSpec) -> int:
    if field.is_rationals:
        return rank_bareiss(entries)
    if field.p == 2:
        return rank_gf2(entries)
    return rank_mod_p(entries, field.p)


def brute_multidegree_homology(
    inst: QuotientInstance, exponents: tuple[int, ...], field: FieldSpec
) -> dict[int, int]:
    """Strand homology at an arbitrary exponent vector, built from scratch.

    The chain-degree-i basis consists of the wedge index sets F (subsets of
    the positions where the exponent is positive, |F| = i) whose residual
    monomial x^(a - chi_F) lies in I but not in J.  The differential drops
    one index j from F with sign (-1)^(p+1), p the position of j in sorted F,
    and lands on F minus j when the augmented monomial stays outside J.
    """
    n = inst.n
    positive = [j for j in range(n) if exponents[j] > 0]

    def residual(fset: frozenset[int]) -> tuple[int, ...]:
        return tuple(exponents[j] - (1 if j in fset else 0) for j in range(n))

    bases: list[list[frozenset[int]]] = []
    for i in range(len(positive) + 1):
        row = [
            frozenset(fs)
            for fs in combinations(positive, i)
            if brute_quotient_member(inst, residual(frozenset(fs)))
        ]
        bases.append(row)

    def boundary_entries(i: int) -> list[list[int]]:
        source, target = bases[i], bases[i - 1]
        target_index = {fs: kk for kk, fs in enumerate(target)}
        rows = [[0] * len(source) for _ in target]
        for q, fs in enumerate(source):
            ordered = sorted(fs)
            for p, j in enumerate(ordered, start=1):
                k = target_index.get(fs - {j})
                if k is not None:
                    rows[k][q] = 1 if p % 2 else -1
        return rows

    ranks = [0] * (len(bases) + 1)
    for i in range(1, len(bases)):
        if bases[i] and bases[i - 1]:
            ranks[i] = _raw_rank(boundary_entries(i), field)
    dims = {}
    for i, row in enumerate(bases):
        if row:
            dim = len(row) - ranks[i] - ranks[i + 1]
            assert dim >= 0, f"negative homology dim at exponents={exponents}, i={i}"
            dims[i] = dim
    return dims


def brute_depth_all_multidegrees(
    inst: QuotientInstance, max_exponent: int, field: FieldSpec
) -> int:
    """Depth via the full multidegree scan with exponents in 0..max_exponent."""
    top = -1
    for exponents in product(range(max_exponent + 1), repeat=inst.n):
        dims = brute_multidegree_homology(inst, exponents, field)
        for i, dim in dims.items():
            if dim:
                top = max(top, i)
    assert top >= 0
    return inst.n - top


def brute_stanley_depth(inst: QuotientInstance) -> int:
    """Stanley depth by exhaustive enumeration of all interval partitions."""
    elements = poset_elements(inst)
    count = len(elements)
    full = (1 << count) - 1
    interval_bits: dict[tuple[int, int], int] = {}
    for u_idx, u in enumerate(elements):
        for v_idx, v in enumerate(elements):
            if u.mask & ~v.mask == 0:
                bits = 0
                for w_idx, w in enumerate(elements):
                    if u.mask & ~w.mask == 0 and w.mask & ~v.mask == 0:
                        bits |= 1 << w_idx
                interval_bits[(u_idx, v_idx)] = bits

    best = -1

    def recurse(cover: int, current_min: int) -> None:
        nonlocal best
        if cover == full:
            best = max(best, current_min)
            return
        free = ~cover & full
        u_idx = (free & -free).bit_length() - 1
        for (uu, vv), bits in interval_bits.items():
            if uu != u_idx or bits & cover:
                continue
            recurse(cover | bits, min(current_min, elements[vv].degree))

    recurse(0, inst.n + 1)
    assert best >= inst.d
    return best

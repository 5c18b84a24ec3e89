"""Exact rank computation for small dense integer matrices.

Ranks over the rationals are computed by fraction-free (integer-preserving)
elimination; a second, independent route using exact Fraction arithmetic is
kept for cross-validation.  Ranks over prime fields use modular elimination,
with a bitset fast path for GF(2).

The matrices of interest have entries in {-1, 0, +1}, but fraction-free
intermediate values are minors of the input and can grow, so everything
stays in arbitrary-precision Python ints.  Dense storage throughout: strand
matrices at desk scale are at most a few hundred wide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, InternalConsistencyError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: the rationals (p is None) or GF(p) for a prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise InputError(f"{self.p} is not prime")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    @property
    def label(self) -> str:
        return "q" if self.p is None else f"gf:{self.p}"

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls()

    @classmethod
    def prime_field(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse a field label: "q" or "gf:<p>"."""
        if text == "q":
            return cls()
        if text.startswith("gf:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise InputError(f"bad prime in field spec {text!r}") from None
            return cls(p)
        raise InputError(f"unknown field spec {text!r}; expected 'q' or 'gf:<p>'")


RATIONALS = FieldSpec()
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


@dataclass(frozen=True)
class SignMatrix:
    """A dense integer matrix with entries in {-1, 0, +1}.

    Row and column labels document the monomial bases the matrix connects;
    they play no role in arithmetic.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]
    row_labels: tuple[str, ...] = ()
    col_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise InputError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r in self.entries:
            if len(r) != self.cols:
                raise InputError("ragged row")
            for e in r:
                if e not in (-1, 0, 1):
                    raise InputError(f"entry {e} outside {{-1, 0, +1}}")
        if self.row_labels and len(self.row_labels) != self.rows:
            raise InputError("row label count mismatch")
        if self.col_labels and len(self.col_labels) != self.cols:
            raise InputError("col label count mismatch")

    @classmethod
    def from_rows(
        cls,
        entries: Sequence[Sequence[int]],
        cols: int | None = None,
        row_labels: Sequence[str] = (),
        col_labels: Sequence[str] = (),
    ) -> SignMatrix:
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else 0
        return cls(
            rows=rows,
            cols=cols,
            entries=tuple(tuple(int(e) for e in r) for r in entries),
            row_labels=tuple(row_labels),
            col_labels=tuple(col_labels),
        )

    def transpose(self) -> SignMatrix:
        flipped = tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        return SignMatrix(self.cols, self.rows, flipped, self.col_labels, self.row_labels)


def rank_bareiss(entries: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free elimination.

    Working entries are minors of the input (up to sign), so every division
    by the previous pivot is exact; intermediate growth is why the arithmetic
    is on unbounded ints.
    """
    m = [list(r) for r in entries]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pval = m[rank][col]
        mp = m[rank]
        for r in range(rank + 1, nr):
            f = m[r][col]
            mr = m[r]
            for c in range(col + 1, nc):
                mr[c] = (pval * mr[c] - f * mp[c]) // prev
            mr[col] = 0
        prev = pval
        rank += 1
        if rank == nr:
            break
    return rank


def rank_fraction_gauss(entries: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by plain Gaussian elimination on exact Fractions.

    Independent of :func:`rank_bareiss`; used as the cross-validation route.
    """
    m = [[Fraction(e) for e in r] for r in entries]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        mp = m[rank]
        inv = 1 / mp[col]
        for r in range(rank + 1, nr):
            f = m[r][col]
            if f:
                mult = f * inv
                mr = m[r]
                for c in range(col, nc):
                    mr[c] -= mult * mp[c]
        rank += 1
        if rank == nr:
            break
    return rank


def rank_gf2(entries: Sequence[Sequence[int]]) -> int:
    """Rank over GF(2); rows are packed into ints and reduced by XOR."""
    basis: dict[int, int] = {}
    for r in entries:
        v = 0
        for j, e in enumerate(r):
            if e & 1:
                v |= 1 << j
        while v:
            low = v & -v
            if low in basis:
                v ^= basis[low]
            else:
                basis[low] = v
                break
    return len(basis)


def rank_mod_p(entries: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) by modular Gaussian elimination."""
    m = [[e % p for e in r] for r in entries]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        mp = m[rank]
        inv = pow(mp[col], p - 2, p)
        for r in range(rank + 1, nr):
            f = m[r][col]
            if f:
                mult = f * inv % p
                mr = m[r]
                for c in range(col, nc):
                    mr[c] = (mr[c] - mult * mp[c]) % p
        rank += 1
        if rank == nr:
            break
    return rank


def rank(m: SignMatrix, field: FieldSpec = RATIONALS) -> int:
    """The rank of m with entries reduced into the given field."""
    if field.is_rationals:
        return rank_bareiss(m.entries)
    if field.p == 2:
        return rank_gf2(m.entries)
    return rank_mod_p(m.entries, field.p)


def rank_pair_check(m: SignMatrix, field_a: FieldSpec = RATIONALS, field_b: FieldSpec = GF2) -> tuple[int, int]:
    """Ranks over the rationals and over a prime field, with the specialization check.

    A nonvanishing minor over GF(p) lifts to a nonvanishing minor over the
    rationals, so the modular rank can never exceed the rational one; a
    violation means an elimination bug.
    """
    if not field_a.is_rationals or field_b.is_rationals:
        raise InputError("rank_pair_check expects (rationals, prime field)")
    r_q = rank(m, field_a)
    r_p = rank(m, field_b)
    if r_p > r_q:
        raise InternalConsistencyError(
            f"rank over GF({field_b.p}) is {r_p} > rank over Q is {r_q}"
        )
    return r_q, r_p


def compose_is_zero(a: SignMatrix, b: SignMatrix) -> bool:
    """True iff the integer matrix product a*b is identically zero."""
    if a.cols != b.rows:
        raise InputError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    for i in range(a.rows):
        arow = a.entries[i]
        for j in range(b.cols):
            s = 0
            for t in range(a.cols):
                e = arow[t]
                if e:
                    s += e * b.entries[t][j]
            if s:
                return False
    return True

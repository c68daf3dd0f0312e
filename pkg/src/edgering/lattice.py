"""Exact integer row lattices in canonical Hermite normal form.

Everything here is pure-integer arithmetic on small dense vectors; Python
ints never overflow, so no pivoting strategy or bound tracking is needed.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

IntVec = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = a*x + b*y and g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _insert(rows: list[list[int]], pivots: list[int], vec: list[int], dim: int) -> None:
    # echelon insertion: rows are kept with strictly increasing pivot columns,
    # new vectors are folded in by unimodular column-preserving row moves
    j = 0
    while True:
        while j < dim and vec[j] == 0:
            j += 1
        if j == dim:
            return
        pos = bisect_left(pivots, j)
        if pos == len(pivots) or pivots[pos] != j:
            rows.insert(pos, vec)
            pivots.insert(pos, j)
            return
        row = rows[pos]
        a, b = row[j], vec[j]
        if b % a == 0:
            q = b // a
            for k in range(j, dim):
                vec[k] -= q * row[k]
        else:
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            for k in range(j, dim):
                rk, vk = row[k], vec[k]
                row[k] = x * rk + y * vk
                vec[k] = ag * vk - bg * rk


def _canonicalize(rows: list[list[int]], pivots: list[int], dim: int) -> None:
    for idx, j in enumerate(pivots):
        if rows[idx][j] < 0:
            rows[idx] = [-x for x in rows[idx]]
    for idx, j in enumerate(pivots):
        prow = rows[idx]
        a = prow[j]
        for above in range(idx):
            r = rows[above]
            q = r[j] // a  # floor division leaves the entry in [0, a)
            if q:
                for k in range(j, dim):
                    r[k] -= q * prow[k]


class IntegerLattice:
    """Sublattice of Z^dim, stored as its canonical Hermite basis.

    Canonical means: basis rows in echelon order, each pivot positive, and
    every entry above a pivot reduced into [0, pivot).  That representative
    is unique for the lattice, so equality is a plain tuple comparison.
    """

    __slots__ = ("dim", "basis", "pivots")

    def __init__(self, dim: int, vectors: Iterable[Sequence[int]] = ()):
        if dim < 0:
            raise ValueError(f"dimension must be nonnegative, got {dim}")
        rows: list[list[int]] = []
        pivots: list[int] = []
        for v in vectors:
            vec = list(v)
            if len(vec) != dim:
                raise ValueError(f"vector length {len(vec)} does not match dimension {dim}")
            _insert(rows, pivots, vec, dim)
        _canonicalize(rows, pivots, dim)
        self.dim = dim
        self.basis = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def determinant(self) -> int:
        """Index in Z^dim (product of pivots); requires full rank."""
        if self.rank != self.dim:
            raise ValueError("lattice is not full rank")
        out = 1
        for row, j in zip(self.basis, self.pivots):
            out *= row[j]
        return out

    def __contains__(self, vec: Sequence[int]) -> bool:
        v = list(vec)
        if len(v) != self.dim:
            raise ValueError(f"vector length {len(v)} does not match dimension {self.dim}")
        pi = 0
        for j in range(self.dim):
            if v[j] == 0:
                continue
            while pi < len(self.pivots) and self.pivots[pi] < j:
                pi += 1
            if pi == len(self.pivots) or self.pivots[pi] != j:
                return False
            row = self.basis[pi]
            if v[j] % row[j]:
                return False
            q = v[j] // row[j]
            for k in range(j, self.dim):
                v[k] -= q * row[k]
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.dim == other.dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.dim, self.basis))

    def __repr__(self) -> str:
        return f"IntegerLattice(dim={self.dim}, rank={self.rank})"

    def kernel_of_form(self, coeffs: Sequence[int]) -> "IntegerLattice":
        """The sublattice of elements on which the linear form vanishes.

        Works by prepending the form value as an extra coordinate, renormalizing,
        and keeping the rows whose extra coordinate is zero.
        """
        if len(coeffs) != self.dim:
            raise ValueError(f"form length {len(coeffs)} does not match dimension {self.dim}")
        aug = []
        for row in self.basis:
            val = sum(c * x for c, x in zip(coeffs, row))
            aug.append((val,) + row)
        tmp = IntegerLattice(self.dim + 1, aug)
        kept = [row[1:] for row in tmp.basis if row[0] == 0]
        return IntegerLattice(self.dim, kept)


def even_sum_lattice(d: int) -> IntegerLattice:
    """All integer vectors in Z^d with even coordinate sum."""
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    gens = []
    for i in range(d - 1):
        v = [0] * d
        v[i] = 1
        v[d - 1] = 1
        gens.append(v)
    last = [0] * d
    last[d - 1] = 2
    gens.append(last)
    return IntegerLattice(d, gens)

"""Matroids, Grassmann necklaces, positroids and exact matrix input."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .affine import (AffinePermutation, CyclicRankMatrix, affine_of_rank_matrix,
                     from_juggling_states, juggling_states)
from .perms import gale_leq

KSet = tuple[int, ...]


@dataclass(frozen=True)
class Matroid:
    n: int
    k: int
    bases: frozenset[KSet]

    def __post_init__(self):
        bases = frozenset(tuple(sorted(b)) for b in self.bases)
        if not bases:
            raise ValueError("a matroid needs at least one basis")
        for b in bases:
            if len(b) != self.k or len(set(b)) != self.k or not all(1 <= x <= self.n for x in b):
                raise ValueError(f"{list(b)} is not a {self.k}-subset of [1,{self.n}]")
        object.__setattr__(self, "bases", bases)

    def sorted_bases(self) -> list[KSet]:
        return sorted(self.bases)


def uniform_matroid(k: int, n: int) -> Matroid:
    return Matroid(n, k, frozenset(combinations(range(1, n + 1), k)))


def schubert_matroid(i_set: Sequence[int], n: int) -> Matroid:
    """{J : J >= I} in Gale order."""
    return Matroid(n, len(i_set), frozenset(
        j for j in combinations(range(1, n + 1), len(i_set)) if gale_leq(i_set, j)))


def _min_vector(sets: Iterable[Sequence[int]]) -> tuple[int, ...]:
    return tuple(min(col) for col in zip(*sets))


def is_matroid(n: int, k: int, bases: Iterable[Sequence[int]], exchange: bool | None = None) -> bool:
    """Unique Minimum Axiom check; basis exchange is used when ``exchange`` is set
    (and by default for n > 8)."""
    bases = {tuple(sorted(b)) for b in bases}
    if not bases:
        raise ValueError("empty basis set")
    if exchange is None:
        exchange = n > 8
    if exchange:
        return _exchange_holds(bases)
    if k == 0:
        return True
    for w in permutations(range(1, n + 1)):
        images = [tuple(sorted(w[x - 1] for x in b)) for b in bases]
        if _min_vector(images) not in images:
            return False
    return True


def _exchange_holds(bases: set[KSet]) -> bool:
    for a in bases:
        for b in bases:
            for x in set(a) - set(b):
                if not any(tuple(sorted((set(a) - {x}) | {y})) in bases for y in set(b) - set(a)):
                    return False
    return True


def _shift(x: int, r: int, n: int) -> int:
    """Position of x in the cyclic order starting at r."""
    return (x - r) % n + 1


def _unshift(y: int, r: int, n: int) -> int:
    return (y + r - 2) % n + 1


def necklace_of_matroid(m: Matroid) -> tuple[KSet, ...]:
    if not is_matroid(m.n, m.k, m.bases):
        raise ValueError("input is not a matroid")
    return _necklace(m)


def _necklace(m: Matroid) -> tuple[KSet, ...]:
    terms = []
    for r in range(1, m.n + 1):
        images = [tuple(sorted(_shift(x, r, m.n) for x in b)) for b in m.bases]
        low = _min_vector(images) if m.k else ()
        if low not in images:
            raise ValueError("no unique minimal basis; input is not a matroid")
        terms.append(tuple(sorted(_unshift(y, r, m.n) for y in low)))
    return tuple(terms)


def necklace_to_states(terms: Sequence[Sequence[int]], n: int) -> tuple[KSet, ...]:
    """Absolute necklace terms to relative juggling states."""
    return tuple(tuple(sorted(_shift(x, r, n) for x in t)) for r, t in enumerate(terms, 1))


def states_to_necklace(states: Sequence[Sequence[int]], n: int) -> tuple[KSet, ...]:
    return tuple(tuple(sorted(_unshift(y, r, n) for y in s)) for r, s in enumerate(states, 1))


def necklace_of_affine(f: AffinePermutation) -> tuple[KSet, ...]:
    return states_to_necklace(juggling_states(f), f.n)


def affine_of_necklace(terms: Sequence[Sequence[int]], n: int | None = None) -> AffinePermutation:
    n = len(terms) if n is None else n
    return from_juggling_states(necklace_to_states(terms, n), n)


def positroid_of_necklace(terms: Sequence[Sequence[int]], n: int | None = None) -> Matroid:
    n = len(terms) if n is None else n
    affine_of_necklace(terms, n)  # validates
    states = necklace_to_states(terms, n)
    k = len(states[0])
    bases = frozenset(
        b for b in combinations(range(1, n + 1), k)
        if all(gale_leq(s, sorted(_shift(x, r, n) for x in b)) for r, s in enumerate(states, 1)))
    return Matroid(n, k, bases)


def positroid_of_affine(f: AffinePermutation) -> Matroid:
    return positroid_of_necklace(necklace_of_affine(f), f.n)


def envelope(m: Matroid) -> Matroid:
    return positroid_of_necklace(necklace_of_matroid(m), m.n)


def is_positroid(m: Matroid) -> bool:
    return envelope(m) == m


# ---- exact matrices ----

def rational_matrix(rows: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if len({len(r) for r in mat}) > 1:
        raise ValueError("ragged matrix")
    return mat


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    a = [list(r) for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, len(a)):
            if a[i][c]:
                t = a[i][c] / a[rank][c]
                a[i] = [x - t * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    size, det = len(a), Fraction(1)
    for c in range(size):
        pivot = next((i for i in range(c, size) if a[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, size):
            if a[i][c]:
                t = a[i][c] / a[c][c]
                a[i] = [x - t * y for x, y in zip(a[i], a[c])]
    return det


def columns(mat, cols: Iterable[int]):
    cols = list(cols)
    return [[row[c - 1] for c in cols] for row in mat]


def _full_rank(mat) -> tuple[int, int]:
    k, n = len(mat), len(mat[0]) if mat else 0
    if matrix_rank(mat) != k:
        raise ValueError("matrix does not have full row rank")
    return k, n


def plucker_vector(mat) -> dict[KSet, Fraction]:
    k, n = _full_rank(mat)
    return {c: determinant(columns(mat, c)) for c in combinations(range(1, n + 1), k)}


def matroid_of_matrix(mat) -> Matroid:
    k, n = _full_rank(mat)
    return Matroid(n, k, frozenset(c for c, v in plucker_vector(mat).items() if v != 0))


def bounded_affine_permutation_of_matrix(mat) -> AffinePermutation:
    """Special entries of the ranks of cyclically consecutive column blocks."""
    k, n = _full_rank(mat)

    def block_rank(i: int, j: int) -> int:
        return matrix_rank(columns(mat, [(c - 1) % n + 1 for c in range(i, j + 1)]))

    rows = tuple(tuple(block_rank(i, j) for j in range(i, i + n)) for i in range(1, n + 1))
    return affine_of_rank_matrix(CyclicRankMatrix(n, k, rows))

"""Symmetric functions, affine Stanley functions and positroid classes.

Partitions are weakly decreasing tuples of positive integers.  The Schur
classes s_lambda with lambda in the k x (n-k) box form a basis of the
cohomology of Gr(k, n); psi kills every other s_lambda.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .affine import AffinePermutation, affine_length, is_bounded

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    p = tuple(x for x in parts if x)
    if any(a < b for a, b in zip(p, p[1:])) or any(x < 0 for x in p):
        raise ValueError(f"{list(p)} is not a partition")
    return p


@lru_cache(maxsize=None)
def partitions(m: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of m in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, max_part), 0, -1):
        out.extend((first,) + rest for rest in partitions(m - first, first))
    return tuple(out)


def in_box(lam: Sequence[int], k: int, n: int) -> bool:
    return len(lam) <= k and (not lam or lam[0] <= n - k)


def box_partitions(k: int, n: int) -> list[Partition]:
    return [p for m in range(k * (n - k) + 1) for p in partitions(m) if in_box(p, k, n)]


def complement(lam: Sequence[int], k: int, n: int) -> Partition:
    """(n-k-lam_k, ..., n-k-lam_1)."""
    if not in_box(lam, k, n):
        raise ValueError(f"{list(lam)} does not fit the {k}x{n - k} box")
    padded = list(lam) + [0] * (k - len(lam))
    return partition(n - k - x for x in reversed(padded))


def partition_of_subset(s: Sequence[int]) -> Partition:
    """(i_k - k, ..., i_1 - 1)."""
    s = sorted(s)
    return partition(x - t for t, x in reversed(list(enumerate(s, 1))))


def subset_of_partition(lam: Sequence[int], k: int) -> tuple[int, ...]:
    """{lam_k + 1, lam_{k-1} + 2, ..., lam_1 + k}."""
    padded = list(lam) + [0] * (k - len(lam))
    return tuple(padded[k - t] + t for t in range(1, k + 1))


# ---- symmetric functions ----

@dataclass(frozen=True)
class SymmetricFunction:
    basis: str
    terms: tuple[tuple[Partition, int], ...]

    def __post_init__(self):
        if self.basis not in ("m", "s"):
            raise ValueError("basis must be 'm' or 's'")
        terms = tuple(sorted(((partition(p), int(c)) for p, c in dict(self.terms).items() if c),
                             key=lambda t: (sum(t[0]), t[0]), reverse=True))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_dict(cls, basis: str, coeffs: Mapping[Partition, int]) -> "SymmetricFunction":
        return cls(basis, tuple(coeffs.items()))

    def coeffs(self) -> dict[Partition, int]:
        return dict(self.terms)

    def coeff(self, lam: Sequence[int]) -> int:
        return self.coeffs().get(tuple(lam), 0)

    def degrees(self) -> set[int]:
        return {sum(p) for p, _ in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{self.basis}{list(p)}" for p, c in self.terms).replace("+ -", "- ")


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    last, rest = mu[-1], mu[:-1]
    total = 0
    # remove a horizontal strip of size `last` holding the largest entries
    for nu in _strips_below(lam, last):
        total += kostka(nu, rest)
    return total


def _strips_below(lam: Partition, size: int) -> list[Partition]:
    out = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(lam):
            if left == 0:
                out.append(partition(acc))
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for part in range(lam[i], lower - 1, -1):
            take = lam[i] - part
            if take > left:
                break
            rec(i + 1, left - take, acc + [part])

    rec(0, size, [])
    return out


def schur_to_monomial(f: SymmetricFunction) -> SymmetricFunction:
    if f.basis != "s":
        raise ValueError("expected Schur basis")
    out: dict[Partition, int] = {}
    for lam, c in f.terms:
        for mu in partitions(sum(lam)):
            kk = kostka(lam, mu)
            if kk:
                out[mu] = out.get(mu, 0) + c * kk
    return SymmetricFunction.from_dict("m", out)


def monomial_to_schur(f: SymmetricFunction) -> SymmetricFunction:
    """Peel off the lexicographically largest monomial term; Kostka is unitriangular."""
    if f.basis != "m":
        raise ValueError("expected monomial basis")
    rest = f.coeffs()
    out: dict[Partition, int] = {}
    while rest:
        lam = max(rest, key=lambda p: (sum(p), p))
        c = rest[lam]
        out[lam] = c
        for mu in partitions(sum(lam)):
            kk = kostka(lam, mu)
            if kk:
                rest[mu] = rest.get(mu, 0) - c * kk
                if not rest[mu]:
                    del rest[mu]
    return SymmetricFunction.from_dict("s", out)


# ---- affine Stanley functions ----

def simple_reflection(i: int, n: int) -> AffinePermutation:
    """s_i for i in Z/n, swapping i+mn and i+1+mn."""
    i %= n
    window = list(range(1, n + 1))
    if i == 0:
        window[0], window[n - 1] = 0, n + 1
    else:
        window[i - 1], window[i] = i + 1, i
    return AffinePermutation(tuple(window))


def cyclically_decreasing(support: Iterable[int], n: int) -> AffinePermutation:
    """The element whose reduced words put s_{i+1} before s_i whenever both occur."""
    s = {x % n for x in support}
    if len(s) == n:
        raise ValueError("support must be a proper subset of Z/n")
    result = AffinePermutation(tuple(range(1, n + 1)))
    for word in _cyclic_runs(s, n):
        for i in word:
            result = result * simple_reflection(i, n)
    return result


def _cyclic_runs(s: set[int], n: int) -> list[list[int]]:
    """Each maximal run a, a+1, ..., b as the word b, b-1, ..., a."""
    runs = []
    for a in sorted(s):
        if (a - 1) % n in s:
            continue
        run = [a]
        while (run[-1] + 1) % n in s:
            run.append((run[-1] + 1) % n)
        runs.append(list(reversed(run)))
    return runs


@lru_cache(maxsize=None)
def _cyclic_elements(n: int, size: int) -> tuple[AffinePermutation, ...]:
    return tuple(cyclically_decreasing(c, n) for c in combinations(range(n), size))


def to_level_zero(f: AffinePermutation) -> AffinePermutation:
    """i -> f(i - k), which has ball number 0."""
    k = f.ball_number
    return AffinePermutation(tuple(f(i - k) for i in range(1, f.n + 1)))


MAX_STANLEY_LENGTH = 12


def affine_stanley(f: AffinePermutation) -> SymmetricFunction:
    g = to_level_zero(f)
    ell = affine_length(g)
    if ell > MAX_STANLEY_LENGTH:
        raise ValueError(f"length {ell} is over the cap {MAX_STANLEY_LENGTH}")
    out = {lam: _factorizations(g, lam) for lam in partitions(ell)}
    return SymmetricFunction.from_dict("m", out)


@lru_cache(maxsize=None)
def _factorizations(w: AffinePermutation, parts: tuple[int, ...]) -> int:
    """Length-additive factorizations w = c_1 c_2 ... with |c_i| = parts[i]."""
    if not parts:
        return 1 if affine_length(w) == 0 else 0
    target = affine_length(w) - parts[0]
    if target < 0 or (parts[0] == w.n):
        return 0
    total = 0
    for c in _cyclic_elements(w.n, parts[0]):
        v = c.inverse() * w
        if affine_length(v) == target:
            total += _factorizations(v, parts[1:])
    return total


# ---- cohomology of Gr(k, n) ----

@dataclass(frozen=True)
class GrassmannClass:
    k: int
    n: int
    terms: tuple[tuple[Partition, int], ...]

    def __post_init__(self):
        terms = tuple(sorted(((partition(p), int(c)) for p, c in dict(self.terms).items() if c),
                             key=lambda t: (sum(t[0]), t[0]), reverse=True))
        for p, _ in terms:
            if not in_box(p, self.k, self.n):
                raise ValueError(f"{list(p)} does not fit the {self.k}x{self.n - self.k} box")
        object.__setattr__(self, "terms", terms)

    def coeffs(self) -> dict[Partition, int]:
        return dict(self.terms)

    def coeff(self, lam: Sequence[int]) -> int:
        return self.coeffs().get(tuple(lam), 0)

    def __add__(self, other: "GrassmannClass") -> "GrassmannClass":
        out = self.coeffs()
        for p, c in other.terms:
            out[p] = out.get(p, 0) + c
        return GrassmannClass(self.k, self.n, tuple(out.items()))


def psi(f: SymmetricFunction, k: int, n: int) -> GrassmannClass:
    if f.basis != "s":
        raise ValueError("psi expects the Schur basis")
    return GrassmannClass(k, n, tuple((p, c) for p, c in f.terms if in_box(p, k, n)))


def positroid_class(f: AffinePermutation) -> GrassmannClass:
    if not is_bounded(f):
        raise ValueError(f"[{f}] is not bounded")
    return _positroid_class(f)


@lru_cache(maxsize=None)
def _positroid_class(f: AffinePermutation) -> GrassmannClass:
    c = psi(monomial_to_schur(affine_stanley(f)), f.ball_number, f.n)
    assert all(x > 0 for _, x in c.terms), f"negative coefficient in the class of [{f}]"
    assert all(sum(p) == affine_length(f) for p, _ in c.terms)
    return c


def multiply_by_schubert_divisor(c: GrassmannClass) -> GrassmannClass:
    """Pieri rule for s_1 inside the box."""
    out: dict[Partition, int] = {}
    for lam, x in c.terms:
        padded = list(lam) + [0]
        for i in range(len(padded)):
            if i == 0 or padded[i] < padded[i - 1]:
                mu = padded[:]
                mu[i] += 1
                mu = partition(mu)
                if in_box(mu, c.k, c.n):
                    out[mu] = out.get(mu, 0) + x
    return GrassmannClass(c.k, c.n, tuple(out.items()))

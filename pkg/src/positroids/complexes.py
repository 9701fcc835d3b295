"""Projected order complexes of k-Bruhat intervals.

The vertices are the k-subsets sigma_k(x) for x in [u, w]; the facets are
images of maximal chains of [u, w]_k.  These complexes are shellable balls,
and the certificate below records a shelling explicitly.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .perms import (Permutation, bruhat_covers, bruhat_leq, gale_leq, k_bruhat_leq,
                    k_covers, length, sigma_k, transposition)
from .qposet import canonicalize

KSet = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[KSet, ...]
    facets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[KSet]]) -> "SimplicialComplex":
        """The complex generated by the given vertex sets (non-maximal ones dropped)."""
        faces = {frozenset(f) for f in faces}
        maximal = [f for f in faces if not any(f < g for g in faces)]
        vertices = tuple(sorted(set().union(*maximal))) if maximal else ()
        index = {v: i for i, v in enumerate(vertices)}
        facets = tuple(sorted(tuple(sorted(index[v] for v in f)) for f in maximal))
        return cls(vertices, facets)

    def facet_sets(self) -> list[frozenset[KSet]]:
        return [frozenset(self.vertices[i] for i in f) for f in self.facets]

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self) -> set[frozenset[int]]:
        out = set()
        for f in self.facets:
            for r in range(1, len(f) + 1):
                out.update(frozenset(c) for c in combinations(f, r))
        return out

    def is_face(self, vs: Iterable[KSet]) -> bool:
        vs = set(vs)
        return any(vs <= f for f in self.facet_sets())

    def is_minimal_nonface(self, vs: Iterable[KSet]) -> bool:
        vs = set(vs)
        return not self.is_face(vs) and all(self.is_face(vs - {v}) for v in vs)


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    counts = Counter(len(f) for f in c.faces())
    return tuple(counts[i] for i in range(1, c.dimension + 2))


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** i * x for i, x in enumerate(f_vector(c)))


def hilbert_dimension(c: SimplicialComplex, d: int) -> int:
    """Dimension of the degree d part of the Stanley-Reisner ring."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    return sum(fr * comb(d - 1, r) for r, fr in enumerate(f_vector(c)))


# ---- chains ----

def k_chains(u: Permutation, w: Permutation, k: int) -> list[tuple[Permutation, ...]]:
    """Maximal chains of [u, w]_k."""
    return [tuple(c) for c in _k_chains(u, w, k)]


@lru_cache(maxsize=None)
def _k_chains(u: Permutation, w: Permutation, k: int) -> tuple[tuple[Permutation, ...], ...]:
    if u == w:
        return ((u,),)
    out = []
    for v in k_covers(u, k):
        if k_bruhat_leq(v, w, k):
            out.extend((u,) + c for c in _k_chains(v, w, k))
    return tuple(out)


def bruhat_chains(u: Permutation, w: Permutation) -> list[tuple[Permutation, ...]]:
    """Maximal chains of the ordinary Bruhat interval [u, w]."""
    return [tuple(c) for c in _bruhat_chains(u, w)]


@lru_cache(maxsize=None)
def _bruhat_chains(u: Permutation, w: Permutation) -> tuple[tuple[Permutation, ...], ...]:
    if u == w:
        return ((u,),)
    out = []
    for v in bruhat_covers(u):
        if bruhat_leq(v, w):
            out.extend((u,) + c for c in _bruhat_chains(v, w))
    return tuple(out)


def interval_complex(u: Permutation, w: Permutation, k: int) -> SimplicialComplex:
    if not k_bruhat_leq(u, w, k):
        raise ValueError(f"{u} is not <=_{k} {w}")
    images = [frozenset(sigma_k(x, k) for x in c) for c in k_chains(u, w, k)]
    assert len(set(images)) == len(images), "two chains share a facet"
    assert all(len(f) == length(w) - length(u) + 1 for f in images)
    return SimplicialComplex.from_faces(images)


def projected_order_complex(u: Permutation, w: Permutation, k: int) -> SimplicialComplex:
    """sigma_k applied to the whole order complex of the Bruhat interval [u, w]."""
    if not bruhat_leq(u, w):
        raise ValueError(f"{u} is not <= {w}")
    return SimplicialComplex.from_faces(
        frozenset(sigma_k(x, k) for x in c) for c in bruhat_chains(u, w))


# ---- lifting ----

def min_lift(a: Permutation, m: Sequence[int], k: int) -> Permutation:
    """The least c >= a with sigma_k(c) = m; it also satisfies a <=_k c."""
    m = tuple(sorted(m))
    if not gale_leq(sigma_k(a, k), m):
        raise ValueError(f"{list(m)} is not above sigma_k(a) in Gale order")
    found = _reach(a, m, k, up=True)
    low = [c for c in found if all(bruhat_leq(c, d) for d in found)]
    assert len(low) == 1
    return low[0]


def max_lift(b: Permutation, m: Sequence[int], k: int) -> Permutation:
    """The greatest c <= b with sigma_k(c) = m; it also satisfies c <=_k b."""
    m = tuple(sorted(m))
    if not gale_leq(m, sigma_k(b, k)):
        raise ValueError(f"{list(m)} is not below sigma_k(b) in Gale order")
    found = _reach(b, m, k, up=False)
    high = [c for c in found if all(bruhat_leq(d, c) for d in found)]
    assert len(high) == 1
    return high[0]


def _k_down_covers(w: Permutation, k: int) -> list[Permutation]:
    lw = length(w)
    out = []
    for a in range(1, k + 1):
        for b in range(k + 1, w.n + 1):
            if w(a) > w(b):
                v = w * transposition(a, b, w.n)
                if length(v) == lw - 1:
                    out.append(v)
    return out


def _reach(start: Permutation, m: KSet, k: int, up: bool) -> list[Permutation]:
    """Elements with sigma_k = m reachable from start by k-Bruhat covers."""
    seen, stack, found = {start}, [start], []
    while stack:
        x = stack.pop()
        s = sigma_k(x, k)
        if s == m:
            found.append(x)
            continue
        for y in (k_covers(x, k) if up else _k_down_covers(x, k)):
            t = sigma_k(y, k)
            if y not in seen and (gale_leq(t, m) if up else gale_leq(m, t)):
                seen.add(y)
                stack.append(y)
    return found


# ---- shelling ----

@dataclass(frozen=True)
class ShellingCertificate:
    facets: tuple[tuple[KSet, ...], ...]
    # for each facet, the maximal faces it shares with earlier facets
    restrictions: tuple[tuple[tuple[KSet, ...], ...], ...]

    def verify(self) -> bool:
        for i, f in enumerate(self.facets):
            faces = _shared_faces(f, self.facets[:i])
            if i and (not faces or any(len(g) != len(f) - 1 for g in faces)):
                return False
        return True


def _shared_faces(facet, earlier) -> list[frozenset]:
    inter = {frozenset(facet) & frozenset(g) for g in earlier}
    return [x for x in inter if not any(x < y for y in inter)]


def edge_label_key(w: Permutation):
    """Transpositions (a b) ordered by decreasing w(a), then increasing w(b)."""
    return lambda ab: (-w(ab[0]), w(ab[1]))


def chain_labels(chain: Sequence[Permutation]) -> tuple[tuple[int, int], ...]:
    labels = []
    for x, y in zip(chain, chain[1:]):
        a, b = [i for i in range(1, x.n + 1) if x(i) != y(i)]
        labels.append((a, b))
    return tuple(labels)


def shelling_order(u: Permutation, w: Permutation, k: int) -> ShellingCertificate:
    q = canonicalize(u, w, k)
    key = edge_label_key(q.w)
    chains = sorted(k_chains(q.u, q.w, k),
                    key=lambda c: [key(ab) for ab in chain_labels(c)])
    facets = tuple(tuple(sigma_k(x, k) for x in c) for c in chains)
    restrictions = tuple(
        tuple(tuple(sorted(g)) for g in sorted(_shared_faces(f, facets[:i]), key=sorted))
        for i, f in enumerate(facets))
    cert = ShellingCertificate(facets, restrictions)
    assert cert.verify(), f"lexicographic order fails to shell [{u}, {w}]_{k}"
    return cert


def classify_ridges(c: SimplicialComplex) -> dict[tuple[KSet, ...], str]:
    """Each codimension one face tagged "exterior" (one facet) or "interior" (two)."""
    if not c.is_pure():
        raise ValueError("complex is not pure")
    counts: Counter = Counter()
    for f in c.facet_sets():
        if len(f) > 1:
            for v in f:
                counts[tuple(sorted(f - {v}))] += 1
    out = {}
    for ridge, count in counts.items():
        assert count in (1, 2), f"ridge {ridge} lies in {count} facets"
        out[ridge] = "exterior" if count == 1 else "interior"
    return out


def boundary(c: SimplicialComplex) -> SimplicialComplex:
    ext = [r for r, kind in classify_ridges(c).items() if kind == "exterior"]
    return SimplicialComplex.from_faces(ext)

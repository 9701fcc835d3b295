"""Classes of k-Bruhat intervals and their bounded affine permutations.

A pair u <=_k w stands for the interval [u, w]_k; pairs (u z, w z) with
z in S_k x S_{n-k} acting length-additively are identified.  Each class
has a unique representative with w Grassmannian, which QClass stores.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .affine import AffinePermutation, affine_bruhat_leq, is_bounded
from .perms import (Permutation, all_permutations, bruhat_leq, demazure_product,
                    grassmannian_factor, is_anti_grassmannian, is_grassmannian,
                    k_bruhat_leq, length)


@dataclass(frozen=True, order=True)
class QClass:
    k: int
    n: int
    u: Permutation
    w: Permutation

    def __post_init__(self):
        if self.u.n != self.n or self.w.n != self.n:
            raise ValueError("permutation size does not match n")
        if not is_grassmannian(self.w, self.k):
            raise ValueError(f"w={self.w} is not Grassmannian for k={self.k}")
        if not k_bruhat_leq(self.u, self.w, self.k):
            raise ValueError(f"{self.u} is not <=_{self.k} {self.w}")

    @property
    def rank(self) -> int:
        """k(n-k) - (l(w) - l(u)); equals the length of the affine permutation."""
        return self.k * (self.n - self.k) - (length(self.w) - length(self.u))

    def max_representative(self) -> tuple[Permutation, Permutation]:
        """The equivalent pair whose u is a maximal coset representative."""
        u1, u2 = grassmannian_factor(self.u, self.k, maximal=True)
        # u = u1 * u2 with l(u1) = l(u) + l(u2); push u2 back onto w
        z = u2.inverse()
        return self.u * z, self.w * z


def canonicalize(u: Permutation, w: Permutation, k: int) -> QClass:
    if not k_bruhat_leq(u, w, k):
        raise ValueError(f"{u} is not <=_{k} {w}")
    w1, w2 = grassmannian_factor(w, k)
    x = u * w2.inverse()
    assert length(x) == length(u) - length(w2)
    return QClass(k, u.n, x, w1)


def f_of_pair(q: QClass) -> AffinePermutation:
    """u t_{omega_k} w^{-1}."""
    n, k = q.n, q.k
    winv = q.w.inverse()
    window = []
    for i in range(1, n + 1):
        a = winv(i)
        window.append(q.u(a) + (n if a <= k else 0))
    f = AffinePermutation(tuple(window))
    assert is_bounded(f)
    return f


def pair_of_f(f: AffinePermutation) -> QClass:
    if not is_bounded(f):
        raise ValueError(f"[{f}] is not bounded")
    n, k = f.n, f.ball_number
    high = [i for i in range(1, n + 1) if f(i) > n]
    low = [i for i in range(1, n + 1) if f(i) <= n]
    w = Permutation(tuple(high + low))
    u = Permutation(tuple(f(w(a)) - (n if a <= k else 0) for a in range(1, n + 1)))
    return QClass(k, n, u, w)


def q_leq(q1: QClass, q2: QClass) -> bool:
    """Containment order: q1 <= q2 when some representative of q1 sits inside
    one of q2, i.e. the positroid variety of q1 lies in that of q2."""
    if (q1.k, q1.n) != (q2.k, q2.n):
        raise ValueError("classes from different Q(k,n)")
    return affine_bruhat_leq(f_of_pair(q2), f_of_pair(q1))


def enumerate_q(k: int, n: int) -> list[QClass]:
    """All classes, found by classing every pair u <=_k w."""
    perms = all_permutations(n)
    seen = set()
    for u, w in product(perms, perms):
        if k_bruhat_leq(u, w, k):
            seen.add(canonicalize(u, w, k))
    return sorted(seen)


def representatives(q: QClass) -> list[tuple[Permutation, Permutation]]:
    """Every pair (u z, w z) with z in S_k x S_{n-k} length-additive on both."""
    out = []
    for z in _young_subgroup(q.k, q.n):
        u, w = q.u * z, q.w * z
        if length(u) == length(q.u) + length(z) and length(w) == length(q.w) + length(z):
            out.append((u, w))
    return out


def _young_subgroup(k: int, n: int) -> list[Permutation]:
    return [p for p in all_permutations(n)
            if sorted(p.window[:k]) == list(range(1, k + 1))]


def project_closed_richardson(u: Permutation, w: Permutation, k: int) -> AffinePermutation:
    """The f whose positroid variety is the projection of the closed Richardson X_u^w."""
    if not bruhat_leq(u, w):
        raise ValueError(f"{u} is not <= {w}")
    target = Permutation(tuple(sorted(u.window[:k], reverse=True)
                               + sorted(u.window[k:], reverse=True)))
    x = u.inverse() * target
    assert sorted(x.window[:k]) == list(range(1, k + 1))
    ux = u * x
    assert is_anti_grassmannian(ux, k) and length(ux) == length(u) + length(x)
    return f_of_pair(canonicalize(ux, demazure_product(w, x), k))


def rietsch_triple(q: QClass) -> tuple[Permutation, Permutation, Permutation]:
    """(u, v, w) with u maximal, v in S_k x S_{n-k}, w Grassmannian, class <u, w v>."""
    u1, u2 = grassmannian_factor(q.u, q.k, maximal=True)
    # q.u = u1 u2 ; class <u1, w u2^{-1}> with w u2^{-1} = w * v
    v = u2.inverse()
    return u1, v, q.w


def point_class(u: Permutation, k: int) -> QClass:
    return canonicalize(u, u, k)

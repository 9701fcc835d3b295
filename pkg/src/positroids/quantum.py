"""Quantum problems (I, J, d) and three-point Gromov-Witten invariants of Gr(k, n).

The curves of degree d meeting X_J and X^I sweep out a positroid variety
with affine permutation f(I, J, d).  Its class gives the invariants
<X_J, X^I, s_lam>_d.  An independent route is the rim hook rule, which
reduces classical products modulo n-rim hooks.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .affine import AffinePermutation, CyclicRankMatrix, affine_length, is_bounded
from .symfunc import (Partition, complement, in_box, partition, partition_of_subset, partitions,
                      positroid_class)


def _periodic(seq: Sequence[int], n: int):
    """r -> seq_r with seq_{r + len} = seq_r + n."""
    m = len(seq)

    def at(r: int) -> int:
        q, s = divmod(r - 1, m)
        return seq[s] + q * n
    return at


def _check(i_set: Sequence[int], j_set: Sequence[int], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    i_set, j_set = tuple(sorted(i_set)), tuple(sorted(j_set))
    if len(i_set) != len(j_set):
        raise ValueError("I and J must have the same size")
    for s in (i_set, j_set):
        if len(set(s)) != len(s) or any(not 1 <= x <= n for x in s):
            raise ValueError(f"{list(s)} is not a subset of [1,{n}]")
    return i_set, j_set


@dataclass(frozen=True)
class QuantumProblem:
    k: int
    n: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    d: int

    @property
    def f(self) -> AffinePermutation:
        return f_of_quantum(self.I, self.J, self.d, self.n)[0]

    @property
    def valid(self) -> bool:
        return f_of_quantum(self.I, self.J, self.d, self.n)[1]

    def profile(self) -> tuple[int, ...]:
        """d(r) = d + J[1,r) - I[1,r) for r in [n]."""
        return tuple(self.d + count(self.J, 1, r - 1) - count(self.I, 1, r - 1)
                     for r in range(1, self.n + 1))


def f_of_quantum(i_set: Sequence[int], j_set: Sequence[int], d: int, n: int
                 ) -> tuple[AffinePermutation, bool]:
    """f(i_r) = j_{r+k-d}, f(m_r) = l_{r+d}; valid means bounded."""
    i_set, j_set = _check(i_set, j_set, n)
    k = len(i_set)
    if not 0 <= d:
        raise ValueError("degree must be nonnegative")
    m_set = [x for x in range(1, n + 1) if x not in i_set]
    l_set = [x for x in range(1, n + 1) if x not in j_set]
    window = [0] * n
    j_at = _periodic(j_set, n)
    l_at = _periodic(l_set, n)
    for r, i in enumerate(i_set, 1):
        window[i - 1] = j_at(r + k - d)
    for r, m in enumerate(m_set, 1):
        window[m - 1] = l_at(r + d)
    f = AffinePermutation(tuple(window))
    return f, is_bounded(f) and f.ball_number == k


def count(s: Sequence[int], a: int, b: int) -> int:
    """|s cap [a, b]| for 1 <= a, b <= n (empty when b < a)."""
    return sum(1 for x in s if a <= x <= b)


def cyclic_count(s: Sequence[int], a: int, b: int, n: int) -> int:
    """Number of t in [a, b] whose residue lies in s."""
    res = {x % n for x in s}
    return sum(1 for t in range(a, b + 1) if t % n in res)


def quantum_fixed_points(i_set: Sequence[int], j_set: Sequence[int], d: int, n: int
                         ) -> set[tuple[int, ...]]:
    i_set, j_set = _check(i_set, j_set, n)
    k = len(i_set)
    out = set()
    for kk in combinations(range(1, n + 1), k):
        left = max(count(i_set, 1, r - 1) - count(kk, 1, r - 1) for r in range(1, n + 2))
        right = max(count(kk, 1, s - 1) - count(j_set, 1, s - 1) for s in range(1, n + 2))
        if left + right <= d:
            out.add(kk)
    return out


def quantum_rank_matrix(i_set: Sequence[int], j_set: Sequence[int], d: int, n: int
                        ) -> CyclicRankMatrix:
    """Rank matrix of f(I, J, d) from (I, J, d) alone.

    The state at time a is J with its d(a) last elements (in the cyclic order
    starting at a) swapped for the d(a) first elements of the complement L, so
    r_ab = min(J[a,b], k - d(a)) + min(L[a,b], d(a)).
    """
    i_set, j_set = _check(i_set, j_set, n)
    f, valid = f_of_quantum(i_set, j_set, d, n)
    if not valid:
        raise ValueError("invalid quantum problem")
    k = len(i_set)
    l_set = [x for x in range(1, n + 1) if x not in j_set]
    prof = QuantumProblem(k, n, i_set, j_set, d).profile()
    rows = []
    for a in range(1, n + 1):
        da = prof[a - 1]
        row = [min(cyclic_count(j_set, a, b, n), k - da) + min(cyclic_count(l_set, a, b, n), da)
               for b in range(a, a + n - 1)]
        rows.append(tuple(row + [k]))
    return CyclicRankMatrix(n, k, tuple(rows))


def codim_lower(j_set: Sequence[int]) -> int:
    """Codimension of X_J = {V : V >= J at every step}: sum of j_t - t."""
    return sum(partition_of_subset(j_set))


def codim_upper(i_set: Sequence[int], n: int) -> int:
    """Codimension of the opposite Schubert variety X^I."""
    return len(i_set) * (n - len(i_set)) - sum(partition_of_subset(i_set))


def opposite_partition(i_set: Sequence[int], n: int) -> Partition:
    """The Schur index of [X^I]: lambda of the reversed set {n+1-i}."""
    return partition_of_subset([n + 1 - i for i in i_set])


def gromov_witten(i_set: Sequence[int], j_set: Sequence[int], d: int,
                  lam: Sequence[int], n: int) -> int:
    """<X_J, X^I, s_lam>_d, read off the class of the positroid variety of f(I, J, d)."""
    i_set, j_set = _check(i_set, j_set, n)
    k = len(i_set)
    lam = partition(lam)
    if not in_box(lam, k, n):
        raise ValueError(f"{list(lam)} does not fit the {k}x{n - k} box")
    expected = k * (n - k) - expected_length(i_set, j_set, d, n)
    if sum(lam) != expected:
        raise ValueError(f"degree mismatch: |lambda| = {sum(lam)}, expected {expected}")
    f, valid = f_of_quantum(i_set, j_set, d, n)
    if not valid:
        return 0
    # a bounded f of the wrong length has no term in this degree
    return positroid_class(f).coeff(complement(lam, k, n))


def expected_length(i_set: Sequence[int], j_set: Sequence[int], d: int, n: int) -> int:
    """codim X_J + codim X^I - dn."""
    return codim_lower(j_set) + codim_upper(i_set, n) - d * n


def is_nontrivial(i_set: Sequence[int], j_set: Sequence[int], d: int, n: int) -> bool:
    """Bounded f(I, J, d) whose length matches the expected dimension count.

    Boundedness alone is not enough: e.g. I = J = {1,2}, d = 1 in Gr(2,4)
    gives the bounded [2,5,4,7] of length 2 where the count predicts 0.
    """
    f, valid = f_of_quantum(i_set, j_set, d, n)
    return valid and affine_length(f) == expected_length(i_set, j_set, d, n)


# ---- rim hook oracle ----

def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu nu}: LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or len(mu) > len(lam):
        return 0
    if any(m > l for m, l in zip(mu, lam)):
        return 0
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    mu_p = list(mu) + [0] * (len(lam) - len(mu))
    # cells in reading order: rows top to bottom, each row right to left
    cells = [(i, c) for i in range(len(lam)) for c in range(lam[i] - 1, mu_p[i] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)
    total = 0

    def rec(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, c = cells[pos]
        hi = filling.get((i, c + 1), len(nu))
        lo = filling[(i - 1, c)] + 1 if (i - 1, c) in filling else 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1] or (v > 1 and counts[v] + 1 > counts[v - 1]):
                continue
            counts[v] += 1
            filling[(i, c)] = v
            rec(pos + 1)
            del filling[(i, c)]
            counts[v] -= 1

    rec(0)
    return total


def classical_product(mu: Partition, nu: Partition, rows: int | None = None) -> dict[Partition, int]:
    out = {}
    m = sum(mu) + sum(nu)
    for lam in partitions(m):
        if rows is not None and len(lam) > rows:
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out


def rim_hook_reduce(lam: Partition, k: int, n: int) -> tuple[int, int, Partition] | None:
    """Strip n-rim hooks until lam fits the box: (sign, number removed, result) or None."""
    beta = [x + k - i for i, x in enumerate(list(lam) + [0] * (k - len(lam)), 1)]
    sign, removed = 1, 0
    while max(beta) >= n:
        moved = False
        for idx in sorted(range(k), key=lambda t: -beta[t]):
            b = beta[idx]
            if b - n >= 0 and b - n not in beta:
                crossed = sum(1 for x in beta if b - n < x < b)
                sign *= (-1) ** (k - 1 - crossed)
                beta[idx] = b - n
                removed += 1
                moved = True
                break
        if not moved:
            return None
    beta.sort(reverse=True)
    return sign, removed, partition(b - (k - i) for i, b in enumerate(beta, 1))


def rim_hook_oracle(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int],
                    d: int, k: int, n: int) -> int:
    """Coefficient of q^d s_lam in s_mu * s_nu in the quantum cohomology of Gr(k, n)."""
    mu, nu, lam = partition(mu), partition(nu), partition(lam)
    if sum(mu) + sum(nu) != sum(lam) + d * n:
        raise ValueError("degree mismatch")
    total = 0
    for rho, c in classical_product(mu, nu, rows=k).items():
        red = rim_hook_reduce(rho, k, n)
        if red and red[1] == d and red[2] == lam:
            total += red[0] * c
    return total

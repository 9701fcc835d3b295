"""Finite permutations in one-line notation.

Products compose right to left: ``(u * w)(i) == u(w(i))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class Permutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {list(w)}")
        object.__setattr__(self, "window", w)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        _check_same_n(self, other)
        return Permutation(tuple(self.window[j - 1] for j in other.window))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.window, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return format_window(self.window)


def format_window(window: Sequence[int]) -> str:
    if len(window) <= 9 and all(1 <= x <= 9 for x in window):
        return "".join(map(str, window))
    return ",".join(map(str, window))


def parse_permutation(text: str) -> Permutation:
    """Accept "21345" (n <= 9) or "2,1,3,4,5"."""
    text = text.strip().strip("[]")
    if "," in text:
        return Permutation(tuple(int(x) for x in text.split(",")))
    if not text.isdigit():
        raise ValueError(f"cannot parse permutation {text!r}")
    return Permutation(tuple(int(c) for c in text))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(a: int, b: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return Permutation(tuple(w))


def simple(i: int, n: int) -> Permutation:
    return transposition(i, i + 1, n)


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def _check_same_n(u: Permutation, w: Permutation) -> None:
    if u.n != w.n:
        raise ValueError(f"size mismatch: {u.n} vs {w.n}")


def length(w: Permutation) -> int:
    x = w.window
    return sum(1 for i in range(len(x)) for j in range(i + 1, len(x)) if x[i] > x[j])


# k-subsets are sorted tuples of integers in [1, n]

def ksubset(elements: Iterable[int]) -> tuple[int, ...]:
    s = tuple(sorted(elements))
    if len(set(s)) != len(s):
        raise ValueError(f"repeated element in {list(s)}")
    return s


def parse_ksubset(text: str) -> tuple[int, ...]:
    text = text.strip().strip("{}[]")
    if not text:
        return ()
    if "," in text:
        return ksubset(int(x) for x in text.split(","))
    return ksubset(int(c) for c in text)


def format_ksubset(s: Sequence[int], n: int) -> str:
    if n <= 9:
        return "".join(map(str, s))
    return ",".join(map(str, s))


def gale_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    sa, sb = sorted(a), sorted(b)
    if len(sa) != len(sb):
        raise ValueError("Gale order compares sets of equal size")
    return all(x <= y for x, y in zip(sa, sb))


def sigma_k(w: Permutation, k: int) -> tuple[int, ...]:
    if not 0 <= k <= w.n:
        raise ValueError(f"k={k} out of range for n={w.n}")
    return tuple(sorted(w.window[:k]))


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    _check_same_n(u, w)
    return all(gale_leq(u.window[:j], w.window[:j]) for j in range(1, u.n))


def k_bruhat_leq(u: Permutation, w: Permutation, k: int) -> bool:
    """The two-condition criterion for u <=_k w."""
    _check_same_n(u, w)
    n = u.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    for a in range(1, k + 1):
        if u(a) > w(a):
            return False
    for b in range(k + 1, n + 1):
        if u(b) < w(b):
            return False
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if u(a) < u(b) and w(a) > w(b) and not (a <= k < b):
                return False
    return True


def is_grassmannian(w: Permutation, k: int) -> bool:
    """True when w has no descent except possibly at position k."""
    x = w.window
    return all(x[i] < x[i + 1] for i in range(w.n - 1) if i + 1 != k)


def is_anti_grassmannian(w: Permutation, k: int) -> bool:
    """Maximal coset representative: decreasing on [1,k] and on [k+1,n]."""
    x = w.window
    return all(x[i] > x[i + 1] for i in range(w.n - 1) if i + 1 != k)


def grassmannian_factor(w: Permutation, k: int, maximal: bool = False
                        ) -> tuple[Permutation, Permutation]:
    """Split w = w1 * w2 with w2 in S_k x S_{n-k}.

    w1 is the minimal coset representative (each block sorted increasing),
    and the product is length-additive.  With ``maximal=True`` w1 is the
    maximal representative instead, so that l(w1) = l(w) + l(w2).
    """
    if not 0 <= k <= w.n:
        raise ValueError(f"k={k} out of range for n={w.n}")
    first, last = sorted(w.window[:k]), sorted(w.window[k:])
    if maximal:
        first.reverse()
        last.reverse()
    w1 = Permutation(tuple(first + last))
    return w1, w1.inverse() * w


def descents(w: Permutation) -> list[int]:
    return [i for i in range(1, w.n) if w(i) > w(i + 1)]


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}."""
    word = []
    x = list(w.window)
    while True:
        for i in range(len(x) - 1):
            if x[i] > x[i + 1]:
                x[i], x[i + 1] = x[i + 1], x[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def all_reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    return list(_reduced_words(w.window))


@lru_cache(maxsize=None)
def _reduced_words(x: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    out = []
    for i in range(len(x) - 1):
        if x[i] > x[i + 1]:
            y = list(x)
            y[i], y[i + 1] = y[i + 1], y[i]
            out.extend(word + (i + 1,) for word in _reduced_words(tuple(y)))
    return tuple(out) if out else ((),)


def demazure_product(u: Permutation, v: Permutation, word: Sequence[int] | None = None
                     ) -> Permutation:
    """u o v, reading a reduced word of v (any word gives the same answer)."""
    _check_same_n(u, v)
    x = list(u.window)
    for i in (reduced_word(v) if word is None else word):
        if x[i - 1] < x[i]:
            x[i - 1], x[i] = x[i], x[i - 1]
    return Permutation(tuple(x))


def bruhat_covers(w: Permutation) -> list[Permutation]:
    """Elements covering w: w(a b) with one more inversion."""
    lw = length(w)
    out = []
    for a in range(1, w.n + 1):
        for b in range(a + 1, w.n + 1):
            if w(a) < w(b):
                v = w * transposition(a, b, w.n)
                if length(v) == lw + 1:
                    out.append(v)
    return out


def k_covers(w: Permutation, k: int) -> list[Permutation]:
    """k-Bruhat covers: w(a b) with a <= k < b and length up by one."""
    lw = length(w)
    out = []
    for a in range(1, k + 1):
        for b in range(k + 1, w.n + 1):
            if w(a) < w(b):
                v = w * transposition(a, b, w.n)
                if length(v) == lw + 1:
                    out.append(v)
    return out

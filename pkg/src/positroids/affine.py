"""Affine permutations, juggling patterns and bounded affine permutations.

An affine permutation is a bijection f of the integers with f(i+n) = f(i)+n,
stored by its window [f(1), ..., f(n)].  Bounded ones (i <= f(i) <= i+n)
with ball number k index positroid varieties in Gr(k, n); this module
converts between them, juggling state sequences, siteswaps, cyclic rank
matrices and decorated permutations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .perms import Permutation, gale_leq


@dataclass(frozen=True, order=True)
class AffinePermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        n = len(w)
        if n == 0:
            raise ValueError("empty window")
        if len({x % n for x in w}) != n:
            raise ValueError(f"window {list(w)} repeats a residue mod {n}")
        if (sum(w) - n * (n + 1) // 2) % n:
            raise ValueError(f"window {list(w)} has non-integer ball number")
        object.__setattr__(self, "window", w)

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def ball_number(self) -> int:
        n = self.n
        return (sum(self.window) - n * (n + 1) // 2) // n

    k = ball_number

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return AffinePermutation(tuple(self(x) for x in other.window))

    def inverse(self) -> "AffinePermutation":
        n = self.n
        inv = [0] * n
        for i, v in enumerate(self.window, 1):
            q, r = divmod(v - 1, n)
            inv[r] = i - q * n
        return AffinePermutation(tuple(inv))

    def span(self) -> int:
        """max |f(i) - i|."""
        return max(abs(v - i) for i, v in enumerate(self.window, 1))

    def __str__(self) -> str:
        return ",".join(map(str, self.window))


def parse_affine(text: str) -> AffinePermutation:
    text = text.strip().strip("[]")
    if "," in text or " " in text:
        return AffinePermutation(tuple(int(x) for x in text.replace(",", " ").split()))
    return AffinePermutation(tuple(int(c) for c in text))


def from_permutation(w: Permutation) -> AffinePermutation:
    return AffinePermutation(w.window)


def translation(mu: Sequence[int]) -> AffinePermutation:
    """t_mu : i -> i + n*mu_i."""
    n = len(mu)
    return AffinePermutation(tuple(i + n * m for i, m in enumerate(mu, 1)))


def t_omega(k: int, n: int) -> AffinePermutation:
    return translation([1] * k + [0] * (n - k))


def ground_state(k: int, n: int) -> AffinePermutation:
    """f(i) = i + k, the minimum of Bound(k, n)."""
    return AffinePermutation(tuple(i + k for i in range(1, n + 1)))


def is_bounded(f: AffinePermutation) -> bool:
    return all(i <= v <= i + f.n for i, v in enumerate(f.window, 1))


def _require_bounded(f: AffinePermutation) -> None:
    if not is_bounded(f):
        raise ValueError(f"affine permutation [{f}] is not bounded")


@lru_cache(maxsize=None)
def affine_length(f: AffinePermutation) -> int:
    """Number of inversion classes (i, j), i in [1,n], i < j, f(i) > f(j)."""
    reach = 2 * f.span() + 1
    return sum(1 for i in range(1, f.n + 1)
               for j in range(i + 1, i + reach + 1) if f(i) > f(j))


def affine_transposition(f: AffinePermutation, a: int, b: int) -> AffinePermutation:
    """f composed with the affine reflection swapping a+mn and b+mn."""
    n = f.n
    if (a - b) % n == 0:
        raise ValueError("positions must differ mod n")
    w = list(f.window)
    for i in range(1, n + 1):
        if (i - a) % n == 0:
            w[i - 1] = f(b + (i - a))
        elif (i - b) % n == 0:
            w[i - 1] = f(a + (i - b))
    return AffinePermutation(tuple(w))


def down_covers(f: AffinePermutation) -> list[AffinePermutation]:
    """All g with g = f t, t a reflection, l(g) = l(f) - 1."""
    lf = affine_length(f)
    out = set()
    reach = 2 * f.span() + 1
    for a in range(1, f.n + 1):
        for b in range(a + 1, a + reach + 1):
            if (b - a) % f.n and f(a) > f(b):
                g = affine_transposition(f, a, b)
                if affine_length(g) == lf - 1:
                    out.add(g)
    return sorted(out)


# ---- juggling states ----

@dataclass(frozen=True)
class JugglingState:
    """A virtual state: balls in Z_{>0} plus holes in Z_{<=0}."""
    balls: tuple[int, ...]
    holes: tuple[int, ...] = field(default=())

    @property
    def ball_number(self) -> int:
        return len(self.balls) - len(self.holes)


def virtual_state(f: AffinePermutation, t: int) -> JugglingState:
    """{f(i) - t : i <= t}, recorded by its deviation from the nonpositive integers."""
    reach = f.span() + 1
    balls = sorted(f(i) - t for i in range(t - reach, t + 1) if f(i) > t)
    holes = sorted(f(i) - t for i in range(t + 1, t + reach + 1) if f(i) <= t)
    return JugglingState(tuple(balls), tuple(holes))


def state_at(f: AffinePermutation, t: int) -> tuple[int, ...]:
    """The juggling state of a bounded f at time t, as a subset of [n]."""
    _require_bounded(f)
    return tuple(sorted(f(i) - t for i in range(t - f.n + 1, t + 1) if f(i) > t))


def height(state: JugglingState | Sequence[int]) -> int:
    if not isinstance(state, JugglingState):
        state = JugglingState(tuple(state))
    return sum(state.balls) - sum(state.holes)


def can_follow(s1: Sequence[int], s2: Sequence[int]) -> int | None:
    """The throw t taking state s1 to s2, or None."""
    shifted = {x - 1 for x in s1 if x > 1}
    target = set(s2)
    if 1 not in s1:
        return 0 if target == shifted else None
    if not shifted <= target:
        return None
    extra = target - shifted
    return extra.pop() if len(extra) == 1 else None


def juggling_states(f: AffinePermutation) -> tuple[tuple[int, ...], ...]:
    _require_bounded(f)
    return tuple(state_at(f, i - 1) for i in range(1, f.n + 1))


def from_juggling_states(states: Sequence[Sequence[int]], n: int | None = None
                         ) -> AffinePermutation:
    states = [tuple(sorted(s)) for s in states]
    if n is None:
        n = len(states)
    if len(states) != n:
        raise ValueError(f"expected {n} states, got {len(states)}")
    if len({len(s) for s in states}) != 1:
        raise ValueError("states have different numbers of balls")
    window = []
    for i in range(n):
        s = states[i]
        if any(not 1 <= x <= n for x in s):
            raise ValueError(f"state {list(s)} is not inside [1,{n}]")
        t = can_follow(s, states[(i + 1) % n])
        if t is None:
            raise ValueError(f"state {i + 2 if i + 1 < n else 1} cannot follow state {i + 1}")
        window.append(i + 1 + t)
    f = AffinePermutation(tuple(window))
    if juggling_states(f) != tuple(states):
        raise ValueError("states are not a consistent juggling sequence")
    return f


def to_siteswap(f: AffinePermutation) -> tuple[int, ...]:
    return tuple(v - i for i, v in enumerate(f.window, 1))


def from_siteswap(throws: Sequence[int]) -> AffinePermutation:
    if any(t < 0 for t in throws):
        raise ValueError("negative throw")
    return AffinePermutation(tuple(i + t for i, t in enumerate(throws, 1)))


def parse_siteswap(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text or " " in text:
        return tuple(int(x) for x in text.replace(",", " ").split())
    if not text.isdigit():
        raise ValueError(f"cannot parse siteswap {text!r}")
    return tuple(int(c) for c in text)


def format_siteswap(throws: Sequence[int]) -> str:
    if len(throws) <= 9 and all(t <= 9 for t in throws):
        return "".join(map(str, throws))
    return ",".join(map(str, throws))


# ---- cyclic rank matrices ----

def rank_entry(f: AffinePermutation, i: int, j: int) -> int:
    """r_ij for bounded f, any integers i, j."""
    k, n = f.ball_number, f.n
    if j < i:
        return j - i + 1
    if j >= i + n - 1:
        return k
    return k - sum(1 for a in range(j - n + 1, i) if f(a) > j)


@dataclass(frozen=True)
class CyclicRankMatrix:
    n: int
    k: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"rank matrix must be {self.n}x{self.n}")
        object.__setattr__(self, "rows", rows)

    def entry(self, i: int, j: int) -> int:
        n = self.n
        if j < i:
            return j - i + 1
        if j >= i + n - 1:
            return self.k
        q, r = divmod(i - 1, n)
        return self.rows[r][j - q * n - (r + 1)]

    def special_entries(self) -> list[tuple[int, int]]:
        r = self.entry
        return [(i, j) for i in range(1, self.n + 1) for j in range(i, i + self.n + 1)
                if r(i, j) == r(i + 1, j) == r(i, j - 1) > r(i + 1, j - 1)]

    def validate(self) -> None:
        n, k, r = self.n, self.k, self.entry
        if not 0 <= k <= n:
            raise ValueError(f"k={k} out of range")
        for i in range(1, n + 1):
            if self.rows[i - 1][n - 1] != k:
                raise ValueError(f"row {i} does not reach rank {k}")
            for j in range(i, i + n + 1):
                if r(i, j) - r(i + 1, j) not in (0, 1) or r(i, j) - r(i, j - 1) not in (0, 1):
                    raise ValueError(f"entry ({i},{j}) breaks the unit step condition")
                if r(i + 1, j - 1) == r(i + 1, j) == r(i, j - 1) != r(i, j):
                    raise ValueError(f"entry ({i},{j}) breaks the 2x2 condition")


def cyclic_rank_matrix(f: AffinePermutation) -> CyclicRankMatrix:
    _require_bounded(f)
    n = f.n
    rows = tuple(tuple(rank_entry(f, i, j) for j in range(i, i + n)) for i in range(1, n + 1))
    return CyclicRankMatrix(n, f.ball_number, rows)


def affine_of_rank_matrix(m: CyclicRankMatrix) -> AffinePermutation:
    m.validate()
    window = [0] * m.n
    for i, j in m.special_entries():
        if window[i - 1]:
            raise ValueError(f"row {i} has two special entries")
        window[i - 1] = j
    if not all(window):
        raise ValueError("some row has no special entry")
    f = AffinePermutation(tuple(window))
    if f.ball_number != m.k or cyclic_rank_matrix(f) != m:
        raise ValueError("rank matrix is not the rank matrix of a bounded affine permutation")
    return f


def affine_bruhat_leq(f: AffinePermutation, g: AffinePermutation) -> bool:
    """Bruhat order on Bound(k, n): rank matrix of f dominates that of g."""
    if f.n != g.n or f.ball_number != g.ball_number:
        raise ValueError("affine permutations must share n and ball number")
    rf, rg = _ranks(f), _ranks(g)
    return all(a >= b for a, b in zip(rf, rg))


@lru_cache(maxsize=None)
def _ranks(f: AffinePermutation) -> tuple[int, ...]:
    return tuple(x for row in cyclic_rank_matrix(f).rows for x in row)


def juggling_leq(f: AffinePermutation, g: AffinePermutation) -> bool:
    """Entrywise Gale comparison of the state sequences."""
    return all(gale_leq(a, b) for a, b in zip(juggling_states(f), juggling_states(g)))


# ---- decorated permutations ----

@dataclass(frozen=True)
class DecoratedPermutation:
    base: Permutation
    colors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        colors = tuple(sorted((int(i), int(c)) for i, c in dict(self.colors).items()))
        fixed = [i for i in range(1, self.base.n + 1) if self.base(i) == i]
        if [i for i, _ in colors] != fixed:
            raise ValueError("colors must be given exactly on the fixed points")
        if any(c not in (1, -1) for _, c in colors):
            raise ValueError("colors must be +1 or -1")
        object.__setattr__(self, "colors", colors)

    def __str__(self) -> str:
        col = dict(self.colors)
        parts = []
        for i, v in enumerate(self.base.window, 1):
            parts.append(f"{v}{'+' if col[i] > 0 else '-'}" if i in col else str(v))
        return ",".join(parts)


def parse_decorated(text: str) -> DecoratedPermutation:
    """"2,1,3+,4-": fixed points carry their color as a suffix."""
    window, colors = [], []
    for i, tok in enumerate(text.strip().strip("[]").split(","), 1):
        tok = tok.strip()
        if tok[-1] in "+-":
            colors.append((i, 1 if tok[-1] == "+" else -1))
            tok = tok[:-1]
        window.append(int(tok))
    return DecoratedPermutation(Permutation(tuple(window)), tuple(colors))


def to_decorated(f: AffinePermutation) -> DecoratedPermutation:
    _require_bounded(f)
    n = f.n
    base = Permutation(tuple((v - 1) % n + 1 for v in f.window))
    colors = tuple((i, -1 if v == i else 1) for i, v in enumerate(f.window, 1)
                   if v in (i, i + n))
    return DecoratedPermutation(base, colors)


def from_decorated(dp: DecoratedPermutation, k: int | None = None) -> AffinePermutation:
    n, col = dp.base.n, dict(dp.colors)
    window = []
    for i, v in enumerate(dp.base.window, 1):
        if v == i:
            window.append(i if col[i] < 0 else i + n)
        else:
            window.append(v if v > i else v + n)
    f = AffinePermutation(tuple(window))
    if k is not None and f.ball_number != k:
        raise ValueError(f"decorated permutation has {f.ball_number} anti-exceedances, not {k}")
    return f


# ---- Bound(k, n) ----

MAX_N = 12


def enumerate_bound(k: int, n: int) -> list[AffinePermutation]:
    """Bound(k, n) in lexicographic order of windows."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    return list(_enumerate_bound(k, n))


@lru_cache(maxsize=None)
def _enumerate_bound(k: int, n: int) -> tuple[AffinePermutation, ...]:
    out = []
    window: list[int] = []
    used = [False] * n

    def extend(i: int, big: int) -> None:
        if i > n:
            if big == k:
                out.append(AffinePermutation(tuple(window)))
            return
        for v in range(i, i + n + 1):
            r = v % n
            b = big + (v > n)
            if used[r] or b > k or b + (n - i) < k:
                continue
            used[r] = True
            window.append(v)
            extend(i + 1, b)
            window.pop()
            used[r] = False

    extend(1, 0)
    return tuple(out)


def bound_covers(elements: Sequence[AffinePermutation]) -> list[tuple[int, int]]:
    """Hasse diagram edges (i, j): elements[j] covers elements[i]."""
    lengths = [affine_length(f) for f in elements]
    edges = []
    for i, f in enumerate(elements):
        for j, g in enumerate(elements):
            if lengths[j] == lengths[i] + 1 and affine_bruhat_leq(f, g):
                edges.append((i, j))
    return edges


def mobius_table(elements: Sequence[AffinePermutation]) -> dict[tuple[int, int], int]:
    """mu(x, y) for every comparable pair of indices."""
    order = sorted(range(len(elements)), key=lambda i: affine_length(elements[i]))
    leq = {(i, j): affine_bruhat_leq(elements[i], elements[j])
           for i in order for j in order}
    mu = {}
    for x in order:
        above = [y for y in order if leq[x, y]]
        for y in above:
            if y == x:
                mu[x, y] = 1
            else:
                mu[x, y] = -sum(mu[x, z] for z in above if z != y and (x, z) in mu and leq[z, y])
    return mu


def mobius(f: AffinePermutation, g: AffinePermutation,
           universe: Iterable[AffinePermutation] | None = None) -> int:
    if not affine_bruhat_leq(f, g):
        raise ValueError("mobius requires f <= g")
    if universe is None:
        universe = enumerate_bound(f.ball_number, f.n)
    interval = [h for h in universe if affine_bruhat_leq(f, h) and affine_bruhat_leq(h, g)]
    table = mobius_table(interval)
    return table[interval.index(f), interval.index(g)]

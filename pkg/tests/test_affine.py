import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from positroids.affine import (AffinePermutation, CyclicRankMatrix, JugglingState, affine_bruhat_leq,
                               affine_length, affine_of_rank_matrix, can_follow, cyclic_rank_matrix,
                               down_covers, enumerate_bound, from_decorated, from_juggling_states,
                               from_siteswap, ground_state, height, is_bounded, juggling_leq,
                               juggling_states, mobius, mobius_table, parse_decorated, rank_entry,
                               state_at, t_omega, to_decorated, to_siteswap, translation,
                               virtual_state)
from positroids.perms import Permutation

A = lambda *w: AffinePermutation(tuple(w))
F2358 = A(2, 3, 5, 8)
F43567 = A(4, 3, 5, 6, 7)


def brute_bound(k, n):
    """All windows with i <= f(i) <= i+n, distinct residues and ball number k."""
    out = []
    for window in product(*[range(i, i + n + 1) for i in range(1, n + 1)]):
        if len({v % n for v in window}) == n and sum(window) - n * (n + 1) // 2 == k * n:
            out.append(AffinePermutation(window))
    return sorted(out)


def brute_length(f, reach=40):
    return sum(1 for i in range(1, f.n + 1) for j in range(i + 1, i + reach) if f(i) > f(j))


@st.composite
def affine_perms(draw, n=None):
    n = n or draw(st.integers(1, 6))
    base = draw(st.permutations(range(1, n + 1)))
    shifts = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    return AffinePermutation(tuple(b + n * s for b, s in zip(base, shifts)))


# ---- basic structure ----

def test_window_validation():
    with pytest.raises(ValueError):
        A(1, 5, 3, 4)
    assert F2358.ball_number == 2
    assert F2358(5) == 6 and F2358(0) == 4 and F2358(-3) == -2


@given(affine_perms(), affine_perms())
def test_ball_number_is_a_homomorphism(f, g):
    if f.n != g.n:
        return
    assert (f * g).ball_number == f.ball_number + g.ball_number
    assert (f * g)(7) == f(g(7))
    assert (f * f.inverse()).window == tuple(range(1, f.n + 1))


@given(affine_perms())
def test_length_matches_wide_scan(f):
    assert affine_length(f) == brute_length(f, reach=4 * f.span() + 4 * f.n + 2)


def test_length_examples():
    assert affine_length(ground_state(2, 5)) == 0
    assert affine_length(F43567) == 1
    for k, n in [(1, 3), (2, 4), (2, 5), (3, 6)]:
        assert affine_length(t_omega(k, n)) == k * (n - k)


def test_is_bounded_examples():
    assert is_bounded(F2358) and is_bounded(A(5, 2, 7, 4))
    assert not is_bounded(A(0, 1, 2, 3))


# ---- juggling ----

def test_states_examples():
    assert state_at(F2358, 0) == (1, 4)
    assert state_at(F2358, 1) == (1, 3)
    assert juggling_states(F2358) == ((1, 4), (1, 3), (1, 2), (1, 2))
    assert juggling_states(F43567) == ((1, 2), (1, 3), (1, 2), (1, 2), (1, 2))
    assert set(juggling_states(ground_state(3, 5))) == {(1, 2, 3)}


def test_siteswaps():
    assert to_siteswap(F43567) == (3, 1, 2, 2, 2)
    assert to_siteswap(A(5, 2, 7, 4)) == (4, 0, 4, 0)
    assert to_siteswap(F2358) == (1, 1, 2, 4)
    # the rotation 4112 of that siteswap describes the same pattern started one beat earlier
    g = from_siteswap((4, 1, 1, 2))
    assert juggling_states(g) == ((1, 2), (1, 4), (1, 3), (1, 2))


def test_state_periodicity():
    for f in enumerate_bound(2, 5):
        for t in range(-3, 4):
            assert state_at(f, t) == state_at(f, t + 5)


def test_can_follow_examples():
    assert can_follow((1, 4), (1, 3)) == 1
    assert can_follow((1, 2, 3), (1, 2, 3)) == 3
    assert can_follow((2,), (2,)) is None
    assert can_follow((2,), (1,)) == 0


def test_can_follow_matches_exhaustive_throws():
    n = 5
    from itertools import combinations
    for k in range(1, n):
        for s1 in combinations(range(1, n + 1), k):
            for s2 in combinations(range(1, n + 1), k):
                hits = []
                for t in range(0, n + 1):
                    shifted = {x - 1 for x in s1} | ({t} if 1 in s1 else set())
                    if 1 not in s1 and t != 0:
                        continue
                    if shifted - {0} == set(s2) and (1 not in s1 or t not in {x - 1 for x in s1}):
                        hits.append(t)
                assert can_follow(s1, s2) == (hits[0] if hits else None)


def test_height():
    assert height(JugglingState(())) == 0
    assert height((1, 2, 3)) == 6
    assert height(JugglingState((2, 5), (0,))) == 7


@given(affine_perms(), st.integers(-6, 6), st.integers(1, 8))
def test_height_average_identity(f, a, span):
    b = a + span
    lhs = sum(f(i) - i for i in range(a + 1, b + 1))
    rhs = (b - a) * f.ball_number + height(virtual_state(f, b)) - height(virtual_state(f, a))
    assert lhs == rhs


def test_virtual_state_agrees_on_bounded():
    for f in enumerate_bound(2, 4):
        for t in range(4):
            assert virtual_state(f, t) == JugglingState(state_at(f, t))


# ---- Bound(k, n) ----

def test_enumeration_counts():
    assert len(enumerate_bound(2, 4)) == 33
    assert enumerate_bound(0, 4) == [A(1, 2, 3, 4)]
    for k, n in [(1, 3), (2, 3), (1, 4), (2, 4), (2, 5)]:
        assert enumerate_bound(k, n) == brute_bound(k, n)
    with pytest.raises(ValueError):
        enumerate_bound(2, 13)


@pytest.mark.parametrize("k,n", [(1, 4), (2, 4), (2, 5), (3, 6)])
def test_round_trips(k, n):
    for f in enumerate_bound(k, n):
        assert from_juggling_states(juggling_states(f)) == f
        assert affine_of_rank_matrix(cyclic_rank_matrix(f)) == f
        assert from_decorated(to_decorated(f), k) == f
        assert from_siteswap(to_siteswap(f)) == f


def test_rank_matrix_example():
    m = cyclic_rank_matrix(F2358)
    rows = [[m.entry(i, j) for j in range(i, i + 5)] for i in range(1, 5)]
    assert rows == [[1, 1, 1, 2, 2], [1, 1, 2, 2, 2], [1, 2, 2, 2, 2], [1, 2, 2, 2, 2]]
    assert m.special_entries() == [(1, 2), (2, 3), (3, 5), (4, 8)]


def test_rank_matrix_point_stratum():
    k, n = 2, 5
    m = cyclic_rank_matrix(t_omega(k, n))
    for i in range(1, n + 1):
        for j in range(i, i + n - 1):
            assert m.entry(i, j) == sum(1 for x in range(i, j + 1) if (x - 1) % n < k)


def test_rank_matrix_periodic_and_counts_balls():
    for f in enumerate_bound(2, 5):
        m = cyclic_rank_matrix(f)
        for i in range(-4, 6):
            for j in range(i - 2, i + 7):
                assert m.entry(i + 5, j + 5) == m.entry(i, j) == rank_entry(f, i, j)
                if i <= j:
                    landed = sum(1 for a in range(i - 6, i) if i <= f(a) <= j)
                    assert m.entry(i, j) == landed


def test_rank_matrix_rejects_garbage():
    with pytest.raises(ValueError):
        affine_of_rank_matrix(CyclicRankMatrix(3, 1, ((1, 1, 1), (0, 1, 1), (1, 2, 1))))
    with pytest.raises(ValueError):
        affine_of_rank_matrix(CyclicRankMatrix(2, 1, ((1, 1), (1, 2))))


def test_decorated_examples():
    d = to_decorated(A(3, 4, 5, 6))
    assert d.base == Permutation((3, 4, 1, 2)) and d.colors == ()
    assert to_decorated(A(1, 2, 3)).colors == ((1, -1), (2, -1), (3, -1))
    assert to_decorated(A(4, 5, 6)).colors == ((1, 1), (2, 1), (3, 1))
    assert from_decorated(parse_decorated("1-,2+,3-,4+")) == A(1, 6, 3, 8)
    with pytest.raises(ValueError):
        from_decorated(parse_decorated("3,4,1,2"), 1)


# ---- order ----

def test_bruhat_minimum_is_ground_state():
    g0 = ground_state(2, 5)
    assert all(affine_bruhat_leq(g0, g) for g in enumerate_bound(2, 5))


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
def test_rank_order_equals_juggling_order(k, n):
    elems = enumerate_bound(k, n)
    for f, g in product(elems, repeat=2):
        assert affine_bruhat_leq(f, g) == juggling_leq(f, g)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
def test_bound_is_lower_order_ideal(k, n):
    for f in enumerate_bound(k, n):
        for g in down_covers(f):
            assert is_bounded(g)
            assert affine_bruhat_leq(g, f)


def test_rank_order_matches_reflection_closure():
    """Bruhat order generated by down covers agrees with rank dominance."""
    elems = enumerate_bound(2, 4)
    below = {}
    for f in sorted(elems, key=affine_length):
        s = {f}
        for g in down_covers(f):
            s |= below[g]
        below[f] = s
    for f, g in product(elems, repeat=2):
        assert affine_bruhat_leq(f, g) == (f in below[g])


def test_mobius_examples():
    elems = enumerate_bound(2, 4)
    f = ground_state(2, 4)
    assert mobius(f, f) == 1
    g = next(g for g in elems if affine_length(g) == affine_length(f) + 1 and affine_bruhat_leq(f, g))
    assert mobius(f, g) == -1
    with pytest.raises(ValueError):
        mobius(g, f)


def test_eulerian_bound_2_4():
    elems = enumerate_bound(2, 4)
    mu = mobius_table(elems)
    for (x, y), value in mu.items():
        assert value == (-1) ** (affine_length(elems[y]) - affine_length(elems[x]))


def test_random_translations_ball_number():
    rng = random.Random(3)
    for _ in range(50):
        mu = [rng.randint(-3, 3) for _ in range(5)]
        assert translation(mu).ball_number == sum(mu)

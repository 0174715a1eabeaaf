"""
The finite group W(A_n) (the symmetric group on n+1 points) in its
descending-brick canonical form.

A brick |i,j| is the ascending run sigma_i sigma_{i+1} ... sigma_j
(empty when i = j+1); a brick ]i,j[ written here as ceil(i,j) is the
descending run sigma_i sigma_{i-1} ... sigma_j (empty when i = j-1).
Every x in W(A_n) factors uniquely as

    x = |i_1,j_1| |i_2,j_2| ... |i_s,j_s|,   n >= j_1 > j_2 > ... > j_s >= 1,
                                             j_t >= i_t >= 1,

and this expression is reduced.  Since the shapes number
prod_{j=1..n} (j+1) = (n+1)!, *every* valid shape is the canonical form of
its product — which is what makes insertion cheap: appending a new brick in
a fresh (lower) level is already canonical.

Right insertion of sigma_k into canonical bricks, looking at the lowest
brick |i,t|:

    k <  t      ->  append the new brick |k,k| (valid shape, hence done)
    k == t      ->  |i,t| sigma_t = |i,t-1|      (shrink; vanishes if i = t)
    k == t+1    ->  |i,t| sigma_{t+1} = |i,t+1|  (extend, then one combine)
    k >= t+2    ->  commute past |i,t|, recurse into the higher bricks

where "combine" resolves two bricks that land on a common level c by the
two common-top identities

    |a,c||b,c| = |b,c||a-1,c-1|      (a > b, letter counts equal)
    |a,c||b,c| = |b+1,c||a,c-1|      (a <= b, letter count drops by 2)

The h-elements h(r,i) = |r,n| ceil(i,1) (h(n+1,0) = 1) and their
interaction with bricks and with the parabolic P = <sigma_2..sigma_{n-1}>
live here too, as do the exhaustive two- and three-brick identity checks.
"""

from typing import NamedTuple

from .perms import AFFINE, check_rank, perm_length, to_permutation
from .words import Word


class FiniteElement(NamedTuple):
    n: int
    bricks: tuple  # ((i, j), ...) with strictly descending j


class HPrefix(NamedTuple):
    r: int
    i: int


def finite_identity(n):
    check_rank(n)
    return FiniteElement(n, ())


def validate_finite(bricks, n):
    """The canonical-shape invariants."""
    prev_j = n + 1
    for i, j in bricks:
        if not (1 <= i <= j <= n and j < prev_j):
            return False
        prev_j = j
    return True


def floor_word(i, j):
    """Letters of |i,j| (empty when i = j+1)."""
    return tuple(range(i, j + 1))


def ceil_word(i, j):
    """Letters of ceil(i,j) = sigma_i sigma_{i-1} ... sigma_j (empty when i = j-1)."""
    return tuple(range(i, j - 1, -1))


def _combine(head, brick):
    """Append `brick`, resolving a common-level clash with head's lowest
    brick by one of the two common-top identities.  Empty bricks drop."""
    if head and head[-1][1] == brick[1]:
        (a, c) = head[-1]
        (b, _) = brick
        if a > b:
            pair = ((b, c), (a - 1, c - 1))
        else:
            pair = ((b + 1, c), (a, c - 1))
        return head[:-1] + tuple(br for br in pair if br[0] <= br[1])
    return head + (brick,)


def right_insert(x, k):
    """Canonical form of x . sigma_k."""
    if not 1 <= k <= x.n:
        raise ValueError("sigma index %r out of range at rank %d" % (k, x.n))
    return FiniteElement(x.n, _insert(x.bricks, k))


def _insert(bricks, k):
    if not bricks:
        return ((k, k),)
    i, t = bricks[-1]
    if k < t:
        return bricks + ((k, k),)
    if k == t:
        head = bricks[:-1]
        if i == t:
            return head
        return head + ((i, t - 1),)
    if k == t + 1:
        return _combine(bricks[:-1], (i, t + 1))
    # k >= t+2 commutes with every letter of the lowest brick
    return _combine(_insert(bricks[:-1], k), (i, t))


def canonicalize_finite(w):
    """Canonical form of a sigma-word (no affine letters allowed)."""
    x = finite_identity(w.n)
    for s in w.letters:
        if s == AFFINE:
            raise ValueError("affine letter in a finite word")
        x = right_insert(x, s)
    return x


def finite_word(x):
    letters = []
    for i, j in x.bricks:
        letters.extend(floor_word(i, j))
    return Word(x.n, tuple(letters))


def finite_length(x):
    return sum(j - i + 1 for i, j in x.bricks)


def finite_mul(x, y):
    if x.n != y.n:
        raise ValueError("rank mismatch: %d vs %d" % (x.n, y.n))
    out = x
    for s in finite_word(y).letters:
        out = right_insert(out, s)
    return out


def finite_inverse(x):
    return canonicalize_finite(Word(x.n, finite_word(x).letters[::-1]))


def finite_left_insert(x, k):
    """Canonical form of sigma_k . x (refolds; fine at desk scale)."""
    return canonicalize_finite(Word(x.n, (k,) + finite_word(x).letters))


def support(x):
    """Generator indices occurring in x (exact, since the form is reduced)."""
    out = set()
    for i, j in x.bricks:
        out.update(range(i, j + 1))
    return out


def is_extremal(x):
    """Both sigma_1 and sigma_n occur in x."""
    s = support(x)
    return 1 in s and x.n in s


def in_parabolic(x):
    """x lies in P = <sigma_2, ..., sigma_{n-1}>."""
    return all(2 <= k <= x.n - 1 for k in support(x))


# --- h(r, i) ----------------------------------------------------------------

def check_hprefix(h, n):
    if not (1 <= h.r <= n + 1 and 0 <= h.i <= n - 1):
        raise ValueError("invalid h(%d,%d) at rank %d" % (h.r, h.i, n))


def h_word(h, n):
    """Letters of h(r,i) = |r,n| ceil(i,1)."""
    check_hprefix(h, n)
    return floor_word(h.r, n) + ceil_word(h.i, 1)


def h_element(h, n):
    """Canonical bricks of h(r,i): the run |r,n| on level n (absent when
    r = n+1) followed by single-letter bricks on levels i, i-1, ..., 1."""
    check_hprefix(h, n)
    top = ((h.r, n),) if h.r <= n else ()
    return FiniteElement(n, top + tuple((k, k) for k in range(h.i, 0, -1)))


def h_is_extremal(h, n):
    """h(r,i) extremal <=> (i >= 1 or r = 1) and r <= n."""
    return h.r <= n and (h.i >= 1 or h.r == 1)


def peel_h(x):
    """
    The unique factorization x = h(r,i) . p with p in P; lengths add.

    Since p fixes 1 and n+1, the outer values determine the prefix:
    r = x(n+1), and x(1) is i+1 or i+2 according to i+1 < r or not.
    """
    n = x.n
    win = to_permutation(finite_word(x).letters, n)
    r = win[n]  # x(n+1)
    v = win[0]  # x(1)
    assert v != r
    i = v - 1 if v < r else v - 2
    h = HPrefix(r, i)
    check_hprefix(h, n)
    p = finite_mul(finite_inverse(FiniteElement(n, h_element(h, n).bricks)), x)
    assert in_parabolic(p), (x, h, p)
    assert finite_length(p) + len(h_word(h, n)) == finite_length(x)
    return h, p


def h_times_floor(j_prev, i_prev, j, n):
    """
    Resolve h(j_prev, i_prev) . |j, n| as h(j', i') . |u, n-1| with u >= 2,
    by the three-case rule (requires j > 1 and the pair inequalities
    against the preceding pair):

        j_prev > j > i_prev+1         ->  (j,   i_prev),   u = j_prev - 1
        j_prev > i_prev+1 >= j > 1    ->  (j-1, i_prev-1), u = j_prev - 1
        i_prev+1 >= j_prev >= j > 1   ->  (j-1, i_prev),   u = j_prev
    """
    if j <= 1:
        raise ValueError("h_times_floor needs j > 1, got %d" % j)
    if j > j_prev:
        raise ValueError("pair inequality j <= j_prev violated")
    if j_prev > i_prev + 1:
        if j > i_prev + 1:
            if j >= j_prev:
                raise ValueError("pair inequality j < j_prev violated")
            out, u = HPrefix(j, i_prev), j_prev - 1
        else:
            out, u = HPrefix(j - 1, i_prev - 1), j_prev - 1
    else:
        out, u = HPrefix(j - 1, i_prev), j_prev
    assert u >= 2
    check_hprefix(out, n)
    return out, u


# --- the brick identity families, instantiated exhaustively -----------------

def _eq_oracle(lhs, rhs, n):
    return to_permutation(lhs, n) == to_permutation(rhs, n)


def brick_identities_check(n):
    """
    Instantiate every two-brick and three-brick identity over its stated
    parameter range at rank n; report (as strings) any instance where the
    sides differ in the oracle, or where the letter counts disagree with
    the identity's nature (counts equal for the non-collapsing identities;
    a drop of exactly 2a, resp. 2, for the collapsing ones).
    """
    check_rank(n)
    bad = []

    def check(name, lhs, rhs, drop):
        if not _eq_oracle(lhs, rhs, n):
            bad.append("%s: sides differ (%r vs %r)" % (name, lhs, rhs))
        if len(lhs) - len(rhs) != drop:
            bad.append(
                "%s: letter count drop %d, expected %d"
                % (name, len(lhs) - len(rhs), drop)
            )

    F, C = floor_word, ceil_word
    # two-brick family
    for a in range(0, n + 1):
        for b in range(1, n + 2):
            if 1 < b <= a + 1 <= n + 1:
                check("2b-1 a=%d b=%d" % (a, b),
                      C(a, 1) + F(b, n), F(b - 1, n) + C(a - 1, 1), 0)
            if b > a + 1:
                check("2b-2 a=%d b=%d" % (a, b),
                      C(a, 1) + F(b, n), F(b, n) + C(a, 1), 0)
    for a in range(0, n + 1):
        check("2b-3 a=%d" % a, C(a, 1) + F(1, n), F(a + 1, n), 2 * a)
    for a in range(1, n + 2):
        for b in range(1, n + 1):
            if a > b:
                check("2b-4 a=%d b=%d" % (a, b),
                      F(a, n) + F(b, n), F(b, n) + F(a - 1, n - 1), 0)
            if a <= b and a <= n:
                check("2b-5 a=%d b=%d" % (a, b),
                      F(a, n) + F(b, n), F(b + 1, n) + F(a, n - 1), 2)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a < b:
                check("2b-6 a=%d b=%d" % (a, b),
                      C(a, 1) + C(b, 1), C(b, 1) + C(a + 1, 2), 0)
            if a >= b:
                check("2b-7 a=%d b=%d" % (a, b),
                      C(a, 1) + C(b, 1), C(b - 1, 1) + C(a, 2), 2)
    # three-brick family
    for a in range(0, n):
        for b in range(1, n + 2):
            for c in range(1, n + 1):
                lhs = F(b, n) + C(a, 1) + F(c, n)
                if c > a + 1 and b > c:
                    check("3b-A a=%d b=%d c=%d" % (a, b, c), lhs,
                          F(c, n) + C(a, 1) + F(b - 1, n - 1), 0)
                if c > a + 1 and b == c:
                    check("3b-B a=%d b=%d c=%d" % (a, b, c), lhs,
                          F(b + 1, n) + C(a, 1) + F(b, n - 1), 2)
                if 1 < c <= a + 1 < b:
                    check("3b-C a=%d b=%d c=%d" % (a, b, c), lhs,
                          F(c - 1, n) + C(a - 1, 1) + F(b - 1, n - 1), 0)
                if 1 < c <= b <= a + 1:
                    check("3b-D a=%d b=%d c=%d" % (a, b, c), lhs,
                          F(c - 1, n) + C(a, 1) + F(b, n - 1), 0)
    return bad

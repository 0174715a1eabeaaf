"""
The rank-raising embedding W(~A_{n-1}) -> W(~A_n) fixing sigma_1..sigma_{n-1}
and sending the affine letter to sigma_n a sigma_n (a now the higher-rank
affine letter).  On canonical forms it is a closed formula: with

    s = max { k : 1 <= k <= m and n - k - i_k > 0 }     (ambient rank n)

every j_k is kept, i_k is raised by 1 exactly for k > s, and the finite
part picks up the run |t, n| on the left, t = n - s + 1.  The affine
length is preserved and the length grows by exactly 2L.

Membership in the image is three literal conditions on the canonical form
(ranges of the first pair, the break inequality at s+1, and the finite
part factoring as |t, n| . y with y one rank down); the preimage just
undoes the formula.
"""

from typing import NamedTuple, Optional

from . import canonical as c
from . import finite as fin
from .canonical import Element
from .perms import AFFINE, check_rank


class EmbeddingWitness(NamedTuple):
    s_break: int
    t: int
    shifted: tuple  # per-pair: False for k <= s_break, True past the break


def _split_index(pairs, n):
    """max{k : n - k - i_k > 0}, 1-based; requires the k = 1 term positive."""
    ks = [k for k, (_, i) in enumerate(pairs, start=1) if n - k - i > 0]
    assert ks, "no split index: first pair out of range for this rank"
    return max(ks)


def embedding_witness(e) -> Optional[EmbeddingWitness]:
    """The split data used by embed; nothing for finite elements."""
    if not e.pairs:
        return None
    n = e.n + 1
    s = _split_index(e.pairs, n)
    assert s <= n - 1
    return EmbeddingWitness(s, n - s + 1, tuple(k > s for k in range(1, len(e.pairs) + 1)))


def embed(e) -> Element:
    """Image of a rank-(n-1) element at rank n, by the closed formula."""
    check_rank(e.n)
    n = e.n + 1
    if not e.pairs:
        return Element(n, (), e.bricks)
    wit = embedding_witness(e)
    pairs = tuple(
        (j, i + 1 if shifted else i)
        for (j, i), shifted in zip(e.pairs, wit.shifted)
    )
    bricks = ((wit.t, n),) + e.bricks
    assert c.validate_block(pairs, n), (e.pairs, pairs)
    assert fin.validate_finite(bricks, n), bricks
    return Element(n, pairs, bricks)


def substitute_word(w):
    """The letter map at the word level: the test oracle for embed."""
    n = w.n + 1
    letters = []
    for s in w.letters:
        if s == AFFINE:
            letters.extend((n, AFFINE, n))
        else:
            letters.append(s)
    from .words import Word

    return Word(n, tuple(letters))


def is_in_image(e) -> bool:
    """The three membership conditions at ambient rank e.n (false below 3)."""
    n = e.n
    if n < 3:
        return False
    if not e.pairs:
        return not e.bricks or e.bricks[0][1] <= n - 1
    j1, i1 = e.pairs[0]
    if not (j1 <= n and i1 < n - 1):
        return False
    s = _split_index(e.pairs, n)
    if s < len(e.pairs):
        _, i_next = e.pairs[s]  # pair s+1, 1-based
        if not (n - (s + 1) - i_next < 0):
            return False
    t = n - s + 1
    return bool(e.bricks) and e.bricks[0] == (t, n)


def preimage(e) -> Optional[Element]:
    if not is_in_image(e):
        return None
    n = e.n
    if not e.pairs:
        return Element(n - 1, (), e.bricks)
    s = _split_index(e.pairs, n)
    pairs = tuple(
        (j, i - 1 if k > s else i)
        for k, (j, i) in enumerate(e.pairs, start=1)
    )
    bricks = e.bricks[1:]
    assert c.validate_block(pairs, n - 1), (e.pairs, pairs)
    assert fin.validate_finite(bricks, n - 1), bricks
    return Element(n - 1, pairs, bricks)

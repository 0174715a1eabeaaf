"""
Words over the generator alphabet of W(~A_n), parsing/printing, the cyclic
diagram automorphism, and the reflection-sequence reducedness test.

A letter is an int: 1..n for sigma_i, 0 (perms.AFFINE) for a_{n+1}.  A Word
pins its rank; operations never coerce across ranks.

Text syntax: whitespace- or '*'-separated tokens, `s<k>` for sigma_k and `a`
for the affine generator, e.g. "s1 a s2" or "s1*a*s2".

Reducedness is decided by the reflection-sequence criterion: with
t_j = (s_1...s_{j-1}) s_j (s_1...s_{j-1})^{-1}, the word s_1...s_r is
reduced iff the t_j are pairwise distinct.  When it is not (but the proper
prefix is), the *hat partner* of the last letter is the unique j < r with
t_j = t_r; deleting positions j and r-1 (0-based) leaves the same group
element.
"""

import re
from typing import NamedTuple, Optional

from .perms import AFFINE, check_rank, compose, identity, inverse, right_mul, to_permutation


class Word(NamedTuple):
    n: int
    letters: tuple

    def __len__(self):
        return len(self.letters)


def word(n, letters):
    """Build a Word, validating rank and letter ranges."""
    check_rank(n)
    letters = tuple(letters)
    for s in letters:
        if not (s == AFFINE or 1 <= s <= n):
            raise ValueError("letter %r invalid at rank %d" % (s, n))
    return Word(n, letters)


_TOKEN = re.compile(r"^s([0-9]+)$")


def parse_word(text, n):
    check_rank(n)
    letters = []
    for tok in text.replace("*", " ").split():
        if tok == "a":
            letters.append(AFFINE)
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError("malformed token %r" % tok)
        k = int(m.group(1))
        if not 1 <= k <= n:
            raise ValueError("index out of range: s%d at rank %d" % (k, n))
        letters.append(k)
    return Word(n, tuple(letters))


def format_word(w):
    return " ".join("a" if s == AFFINE else "s%d" % s for s in w.letters)


def rotate(w, steps):
    """Apply the cyclic diagram automorphism a -> s1 -> s2 -> ... -> sn -> a
    letter-wise, `steps` times (negative steps invert)."""
    nn = w.n + 1
    return Word(w.n, tuple((s + steps) % nn for s in w.letters))


def reflection_sequence(w):
    """Windows of t_j = (s_1...s_{j-1}) s_j (s_1...s_{j-1})^{-1}, j = 1..r."""
    prefix = identity(w.n)
    out = []
    for s in w.letters:
        nxt = right_mul(prefix, s)
        # t = prefix . s . prefix^{-1}
        out.append(compose(nxt, inverse(prefix)))
        prefix = nxt
    return out


def is_reduced(w):
    ts = reflection_sequence(w)
    return len(set(ts)) == len(ts)


def hat_partner(w, proper_prefix_reduced=False) -> Optional[int]:
    """
    For w = s_1...s_r with reduced proper prefix: the 0-based position j of
    the unique earlier letter with t_j = t_r, or None when w is reduced.

    If proper_prefix_reduced is falsy the precondition is checked and a
    ValueError raised on violation; pass True to skip the check.
    """
    if len(w.letters) == 0:
        return None
    ts = reflection_sequence(w)
    if not proper_prefix_reduced:
        if len(set(ts[:-1])) != len(ts) - 1:
            raise ValueError("proper prefix is not reduced")
    last = ts[-1]
    hits = [j for j in range(len(ts) - 1) if ts[j] == last]
    if not hits:
        return None
    assert len(hits) == 1, hits
    return hits[0]


def word_permutation(w):
    """Oracle window of the word's group element."""
    return to_permutation(w.letters, w.n)

"""
Enumeration of affine blocks — the minimal-length representatives of the
right cosets W(~A_n)/W(A_n), indexed by families (j_s, i_s)_{1..m} under
the pairwise inequalities.  Depth-first extension with the inequalities as
pruning predicates; there is no closed counting formula by affine length,
so counts are regression data, not theory.
"""

from typing import NamedTuple

from .perms import check_rank
from .canonical import coset_rep, validate_block  # noqa: F401  (re-exported)


class BlockFamily(NamedTuple):
    rank: int
    affine_length: int
    items: tuple  # blocks, lexicographic on their pair sequences


def _extensions(prefix, n):
    """Legal next pairs after prefix, ascending (j, i)."""
    if not prefix:
        for j in range(1, n + 2):
            for i in range(0, n):
                yield (j, i)
        return
    jp, ip = prefix[-1]
    for j in range(1, n + 2):
        for i in range(0, n):
            if not ((i == 0 and j == 1) or (1 <= i <= n - 1 and 1 <= j <= n)):
                continue
            if not (j <= jp and i >= ip):
                continue
            if jp > ip + 1 and not j < jp:
                continue
            if j > i + 1 and not i > ip:
                continue
            yield (j, i)


def enumerate_blocks(n, m, max_items=2_000_000):
    check_rank(n)
    if m < 0:
        raise ValueError("affine length must be >= 0")
    items = []

    def grow(prefix):
        if len(prefix) == m:
            items.append(prefix)
            if len(items) > max_items:
                raise RuntimeError(
                    "block enumeration exceeded %d items at rank %d, m=%d"
                    % (max_items, n, m)
                )
            return
        for pair in _extensions(prefix, n):
            grow(prefix + (pair,))

    grow(())
    return BlockFamily(n, m, tuple(items))

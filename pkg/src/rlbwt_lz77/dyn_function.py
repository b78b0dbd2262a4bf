"""Dynamic partial function from phrase sources to BWT rows.

``DynFunction`` keeps three pieces: the sorted source positions (rank
space for the domain), a gap-encoded bitvector ``C`` marking which rows are
images, and a ``DynPermutation`` over the marked rows.  ``expand`` inserts
a 0 in ``C``, ``assign`` inserts a 1 and appends to the permutation.
"""

import bisect
import random

from .dynamic_strings import GapBitvector
from .errors import PreconditionError


class _Leaf:
    __slots__ = ("prio", "size", "left", "right", "parent")

    def __init__(self, prio):
        self.prio = prio
        self.size = 1
        self.left = None
        self.right = None
        self.parent = None


def _size(x):
    return 0 if x is None else x.size


class DynPermutation:
    """Permutation of ``0..k-1`` supporting ``append`` and ``map``.

    Elements are nodes of a treap keyed implicitly by in-order rank; the
    image of ``i`` is the in-order rank of the node created by the i-th
    append, recovered by climbing parent links.

    >>> p = DynPermutation.from_images([3, 1, 0, 4, 2])
    >>> p.append(2)
    >>> p.images()
    [4, 1, 0, 5, 3, 2]
    """

    def __init__(self, seed=0xD1CE):
        self._root = None
        self._handles = []
        self._rng = random.Random(seed)
        self.ops = {"insert": 0, "locate": 0}

    @classmethod
    def from_images(cls, images):
        """Build a permutation by appending each image in turn.

        ``images`` must itself be a permutation; the appends are chosen so
        that the final images equal it.
        """
        images = list(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation")
        p = cls()
        for i, v in enumerate(images):
            # value v among the first i+1 images has rank = #earlier smaller ones
            p.append(sum(1 for u in images[:i] if u < v))
        return p

    def __len__(self):
        return len(self._handles)

    @property
    def k(self):
        return len(self._handles)

    @property
    def node_count(self):
        return _size(self._root)

    def _rotate_up(self, x):
        p = x.parent
        g = p.parent
        if p.left is x:
            p.left = x.right
            if x.right is not None:
                x.right.parent = p
            x.right = p
        else:
            p.right = x.left
            if x.left is not None:
                x.left.parent = p
            x.left = p
        p.parent = x
        x.parent = g
        if g is None:
            self._root = x
        elif g.left is p:
            g.left = x
        else:
            g.right = x
        x.size = p.size
        p.size = 1 + _size(p.left) + _size(p.right)

    def append(self, j):
        """Shift every image >= ``j`` up by one and map the new element to ``j``."""
        k = len(self._handles)
        if not 0 <= j <= k:
            raise IndexError(f"append({j}) outside [0, {k}]")
        self.ops["insert"] += 1
        node = _Leaf(self._rng.random())
        self._handles.append(node)
        if self._root is None:
            self._root = node
            return
        x = self._root
        while True:
            x.size += 1
            ls = _size(x.left)
            if j <= ls:
                if x.left is None:
                    x.left = node
                    break
                x = x.left
            else:
                j -= ls + 1
                if x.right is None:
                    x.right = node
                    break
                x = x.right
        node.parent = x
        while node.parent is not None and node.parent.prio < node.prio:
            self._rotate_up(node)

    def map(self, i):
        """Current image of ``i``."""
        if not 0 <= i < len(self._handles):
            raise IndexError(f"map({i}) outside [0, {len(self._handles)})")
        self.ops["locate"] += 1
        x = self._handles[i]
        r = _size(x.left)
        while x.parent is not None:
            if x.parent.right is x:
                r += _size(x.parent.left) + 1
            x = x.parent
        return r

    def images(self):
        return [self.map(i) for i in range(len(self._handles))]


class DynFunction:
    """Map from a fixed set of text positions to rows of a growing BWT.

    Assignments must arrive in increasing order of text position.
    """

    def __init__(self, sources):
        self.domain = sorted(set(s for s in sources if s is not None))
        self.C = GapBitvector()
        self.perm = DynPermutation()
        # domain slot -> permutation element, -1 while unassigned
        self._slot = [-1] * len(self.domain)
        self._last = -1

    @property
    def assigned_count(self):
        return self.perm.k

    @property
    def size(self):
        """Size of the codomain seen so far."""
        return self.C.size

    def _rank(self, i):
        d = bisect.bisect_left(self.domain, i)
        if d == len(self.domain) or self.domain[d] != i:
            raise KeyError(f"{i} is not a phrase source")
        return d

    def __contains__(self, i):
        d = bisect.bisect_left(self.domain, i)
        return d < len(self.domain) and self.domain[d] == i

    def expand(self, j):
        """Shift every image >= ``j`` up by one."""
        if not 0 <= j <= self.C.size:
            raise IndexError(f"expand({j}) outside [0, {self.C.size}]")
        self.C.insert(j, 0)

    def assign(self, i, j):
        """``expand(j)`` then map ``i`` to ``j``."""
        d = self._rank(i)
        if d <= self._last:
            raise PreconditionError(
                f"assign({i}) after assign({self.domain[self._last]}): "
                "sources must be assigned in increasing order"
            )
        if not 0 <= j <= self.C.size:
            raise IndexError(f"assign at {j} outside [0, {self.C.size}]")
        self.C.insert(j, 1)
        self.perm.append(self.C.rank1(j))
        self._slot[d] = self.perm.k - 1
        self._last = d

    def map(self, i):
        """Current row of source position ``i``."""
        slot = self._slot[self._rank(i)]
        if slot < 0:
            raise KeyError(f"{i} has not been assigned")
        return self.C.select1(self.perm.map(slot))

    def is_assigned(self, i):
        return i in self and self._slot[self._rank(i)] >= 0

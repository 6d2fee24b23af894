"""
braid: the classical Garside structure of the braid group B_n.

Simple elements are permutations of {1..n}, stored as 0-indexed image
tables (tuples), so composition is a table lookup and never requires
enumerating the n! simples.  The product convention is "apply left factor
first": (a*b)(i) = b(a(i)), which makes the map braid -> permutation a
homomorphism when braid words are read left to right.

Divisibility matches the weak order on permutations: a left-divides b
exactly when the inversion set of a is contained in that of b, and an atom
s_k left-divides a simple exactly when its table has a descent at k.  The
meet is computed by a greedy common-descent sweep and the join via the
inversion-complementing involution p |-> w0 o p.
"""

from __future__ import annotations

import random
from typing import Iterable

from .core import CanonicalElement, GarsideStructure, normalize

# A simple element of B_n: the image table of a permutation of {0..n-1}.
PermSimple = tuple[int, ...]


class BraidStructure(GarsideStructure):
    """Classical Garside structure on B_n; hashable and compared by n."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("braid groups need at least 2 strands")
        self.n = n
        self.identity: PermSimple = tuple(range(n))
        self.delta: PermSimple = tuple(range(n - 1, -1, -1))
        self.atoms = tuple(self._transposition(k) for k in range(n - 1))
        self.order_of_tau = 1 if n == 2 else 2
        self.delta_norm = n * (n - 1) // 2
        self._inv_cache: dict[PermSimple, PermSimple] = {}
        self._rc_cache: dict[PermSimple, PermSimple] = {}
        self._tau_cache: dict[PermSimple, PermSimple] = {}
        self._norm_cache: dict[PermSimple, int] = {}

    def _transposition(self, k: int) -> PermSimple:
        t = list(range(self.n))
        t[k], t[k + 1] = t[k + 1], t[k]
        return tuple(t)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BraidStructure) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("braid", self.n))

    def __repr__(self) -> str:
        return f"BraidStructure(n={self.n})"

    # -- primitive table operations -------------------------------------

    def mul(self, a: PermSimple, b: PermSimple) -> PermSimple:
        return tuple(b[v] for v in a)

    def inverse_table(self, a: PermSimple) -> PermSimple:
        cached = self._inv_cache.get(a)
        if cached is None:
            inv = [0] * self.n
            for i, v in enumerate(a):
                inv[v] = i
            cached = self._inv_cache[a] = tuple(inv)
        return cached

    def left_quotient(self, a: PermSimple, b: PermSimple) -> PermSimple:
        return self.mul(self.inverse_table(a), b)

    def right_complement(self, a: PermSimple) -> PermSimple:
        cached = self._rc_cache.get(a)
        if cached is None:
            m = self.n - 1
            cached = self._rc_cache[a] = tuple(m - v for v in self.inverse_table(a))
        return cached

    def left_complement(self, a: PermSimple) -> PermSimple:
        return tuple(reversed(self.inverse_table(a)))

    def tau(self, a: PermSimple) -> PermSimple:
        cached = self._tau_cache.get(a)
        if cached is None:
            m = self.n - 1
            cached = self._tau_cache[a] = tuple(m - v for v in reversed(a))
        return cached

    def norm(self, a: PermSimple) -> int:
        """Atom count of the simple = inversion number of the permutation."""
        cached = self._norm_cache.get(a)
        if cached is None:
            cached = self._norm_cache[a] = sum(
                1
                for i in range(self.n)
                for j in range(i + 1, self.n)
                if a[i] > a[j]
            )
        return cached

    # -- the lattice ------------------------------------------------------

    def meet(self, a: PermSimple, b: PermSimple) -> PermSimple:
        """
        Left gcd by the greedy sweep: repeatedly strip an atom that
        left-divides both quotients, i.e. a position where both tables
        descend.  New common descents only appear next to a swap, so the
        candidate stack keeps the sweep near-linear.
        """
        va, vb = list(a), list(b)
        minv = list(range(self.n))  # inverse of the meet built so far
        todo = [
            k
            for k in range(self.n - 1)
            if va[k] > va[k + 1] and vb[k] > vb[k + 1]
        ]
        while todo:
            k = todo.pop()
            if va[k] > va[k + 1] and vb[k] > vb[k + 1]:
                va[k], va[k + 1] = va[k + 1], va[k]
                vb[k], vb[k + 1] = vb[k + 1], vb[k]
                minv[k], minv[k + 1] = minv[k + 1], minv[k]
                if k > 0:
                    todo.append(k - 1)
                if k < self.n - 2:
                    todo.append(k + 1)
        out = [0] * self.n
        for i, v in enumerate(minv):
            out[v] = i
        return tuple(out)

    def join(self, a: PermSimple, b: PermSimple) -> PermSimple:
        # w0 o p complements the inversion set, turning joins into meets.
        m = self.n - 1
        ca = tuple(m - v for v in a)
        cb = tuple(m - v for v in b)
        return tuple(m - v for v in self.meet(ca, cb))

    def simple_divides(self, a: PermSimple, b: PermSimple) -> bool:
        return self.norm(a) + self.norm(self.left_quotient(a, b)) == self.norm(b)

    def atom_divides(self, k: int, a: PermSimple) -> bool:
        """Whether the atom s_{k+1} left-divides the simple a."""
        return a[k] > a[k + 1]

    def all_simples(self) -> Iterable[PermSimple]:
        if self.n > 7:
            raise ValueError(f"refusing to enumerate {self.n}! simple elements")
        import itertools

        return itertools.permutations(range(self.n))

    # -- conversions -------------------------------------------------------

    def reduced_word(self, a: PermSimple) -> list[int]:
        """A reduced word (0-indexed atom list) for the simple a."""
        word = []
        t = list(a)
        changed = True
        while changed:
            changed = False
            for k in range(self.n - 1):
                if t[k] > t[k + 1]:
                    word.append(k)
                    t[k], t[k + 1] = t[k + 1], t[k]
                    changed = True
        return word


_STRUCTURES: dict[int, BraidStructure] = {}


def braid_structure(n: int) -> BraidStructure:
    """Interned braid structures, so repeated lookups share caches."""
    s = _STRUCTURES.get(n)
    if s is None:
        s = _STRUCTURES[n] = BraidStructure(n)
    return s


def perm_to_one_indexed(a: PermSimple) -> list[int]:
    return [v + 1 for v in a]


def perm_from_one_indexed(images: Iterable[int], n: int) -> PermSimple:
    table = tuple(v - 1 for v in images)
    if sorted(table) != list(range(n)):
        raise ValueError(f"not a permutation of 1..{n}: {list(images)}")
    return table


class WordError(ValueError):
    """Raised for malformed input words."""


def parse_word(text: str, n: int) -> CanonicalElement:
    """
    Normal form of a whitespace-separated word.

    Tokens are nonzero integers k for the Artin generator s_k (negative for
    its inverse) or "D"/"D^-1" for the Garside element.  An inverse letter
    a^{-1} is rewritten as D^-1 * (right complement of a, shifted by tau)
    before normalizing.
    """
    s = braid_structure(n)
    letters: list[PermSimple] = []
    shifts: list[int] = []
    for tok in text.split():
        if tok == "D":
            letters.append(s.delta)
            shifts.append(0)
            continue
        if tok == "D^-1":
            letters.append(s.identity)
            shifts.append(-1)
            continue
        try:
            k = int(tok)
        except ValueError:
            raise WordError(f"malformed token {tok!r}") from None
        if k == 0 or abs(k) >= n:
            raise WordError(f"generator index {k} out of range for {n} strands")
        atom = s.atoms[abs(k) - 1]
        if k > 0:
            letters.append(atom)
            shifts.append(0)
        else:
            # a^{-1} = D^-1 * (D a^{-1})
            letters.append(s.left_complement(atom))
            shifts.append(-1)
    power = 0
    word: list[PermSimple] = [s.identity] * len(letters)
    for i in range(len(letters) - 1, -1, -1):
        word[i] = s.tau_pow(letters[i], power)
        power += shifts[i]
    return normalize(s, power, word)


def word_str(x: CanonicalElement) -> str:
    """
    Render an element as a word parse_word accepts: "D"/"D^-1" letters for
    the leading power, then one-indexed generator letters per factor.
    """
    s = x.struct
    parts = ["D"] * x.power if x.power >= 0 else ["D^-1"] * (-x.power)
    for f in x.factors:
        parts.extend(str(k + 1) for k in s.reduced_word(f))
    return " ".join(parts)


def random_simple(rng: random.Random, n: int) -> PermSimple:
    """
    A uniform random non-identity simple of B_n (D included).  Determined by
    the generator state, so a fixed seed reproduces the same sequence.
    """
    table = list(range(n))
    while True:
        rng.shuffle(table)
        if any(table[i] != i for i in range(n)):
            return tuple(table)


def element_from_perms(n: int, perms: Iterable[PermSimple], power: int = 0) -> CanonicalElement:
    return normalize(braid_structure(n), power, perms)

"""
generators: the three seeded random-braid families used by the benchmarks.

Test 1: positive braids of B_{n-1} with summit sup l, made reducible by
        appending one trivial strand.  Cycling barely moves these, so the
        ultra summit set degenerates while the refined summit set stays
        small.
Test 2: nested braids: a 3-strand positive skeleton with summit sup l whose
        strands are cabled by independent products of l random simples of
        B_{n/3}.
Test 3: generic braids D^p x_1...x_k (p random in {0,1}, x_i random
        simples) grown until the canonical length is l and resampled until
        the summit length is also l.

All draws come from a caller-supplied seed through random.Random (Mersenne
Twister), so outputs are reproducible across platforms.
"""

from __future__ import annotations

import random

from ..braid import BraidStructure, PermSimple, braid_structure, random_simple
from ..core import CanonicalElement, delta_power, identity_element, normalize, simple_element
from ..summit import summit_bounds


GENERATOR_SEED_NOTE = "one generator stream per run: sample i consumes the stream after samples 0..i-1"


def _rng(seed: random.Random | int) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _embed_table(t: PermSimple, n: int, offset: int) -> PermSimple:
    out = list(range(n))
    for i, v in enumerate(t):
        out[offset + i] = offset + v
    return tuple(out)


def embed(x: CanonicalElement, n: int, offset: int = 0) -> CanonicalElement:
    """
    Image of a braid of B_m under the strand-range embedding into B_n at
    the given offset; the Garside element of B_m embeds as an ordinary
    simple element of B_n.
    """
    small = x.struct
    if not isinstance(small, BraidStructure):
        raise TypeError("embed expects braid elements")
    if offset + small.n > n:
        raise ValueError("embedded strands do not fit")
    big = braid_structure(n)
    dm = normalize(big, 0, [_embed_table(small.delta, n, offset)])
    word = [_embed_table(f, n, offset) for f in x.factors]
    return dm ** x.power * normalize(big, 0, word)


def _random_positive_with_summit_sup(st: BraidStructure, l: int, rng: random.Random) -> CanonicalElement:
    """Random positive braid built from random simples until sup = l, resampled until sups = l."""
    while True:
        beta = identity_element(st)
        while beta.sup < l:
            beta = beta * simple_element(st, random_simple(rng, st.n))
        if summit_bounds(beta)[1] == l:
            return beta


def gen_test1(n: int, l: int, seed: random.Random | int) -> CanonicalElement:
    """A reducible braid of B_n: a random positive braid of B_{n-1} with
    summit sup l, plus one trivial strand."""
    if n < 3:
        raise ValueError("test 1 needs n >= 3")
    if l < 1:
        raise ValueError("test 1 needs l >= 1")
    rng = _rng(seed)
    beta = _random_positive_with_summit_sup(braid_structure(n - 1), l, rng)
    return embed(beta, n)


def _block_crossing(n: int, m: int, j: int) -> PermSimple:
    # the positive simple braid crossing block j over block j+1 (blocks of m strands)
    out = list(range(n))
    for i in range(j * m, (j + 1) * m):
        out[i] = i + m
    for i in range((j + 1) * m, (j + 2) * m):
        out[i] = i - m
    return tuple(out)


def gen_test2(n: int, l: int, seed: random.Random | int) -> CanonicalElement:
    """A nested braid of B_n: cables of B_{n/3} braids along a random
    positive 3-strand skeleton with summit sup l."""
    if n % 3 != 0:
        raise ValueError("test 2 needs n divisible by 3")
    if n < 3 or l < 1:
        raise ValueError("test 2 needs n >= 3 and l >= 1")
    rng = _rng(seed)
    m = n // 3
    b3 = braid_structure(3)
    big = braid_structure(n)
    skeleton = _random_positive_with_summit_sup(b3, l, rng)

    cables = identity_element(big)
    if m >= 2:
        bm = braid_structure(m)
        for i in range(3):
            cable = normalize(bm, 0, [random_simple(rng, m) for _ in range(l)])
            cables = cables * embed(cable, n, offset=i * m)

    letters = b3.reduced_word(b3.delta) * skeleton.power
    for f in skeleton.factors:
        letters.extend(b3.reduced_word(f))
    cabled_skeleton = normalize(big, 0, [_block_crossing(n, m, j) for j in letters])
    return cables * cabled_skeleton


def gen_test3(n: int, l: int, seed: random.Random | int) -> CanonicalElement:
    """A generic braid of B_n: D^p times random simples, grown to canonical
    length l and resampled until the summit length is l."""
    if n < 3:
        raise ValueError("test 3 needs n >= 3: B_2 has no braids of positive canonical length")
    if l < 1:
        raise ValueError("test 3 needs l >= 1")
    rng = _rng(seed)
    st = braid_structure(n)
    while True:
        p = rng.randrange(2)
        beta = identity_element(st)
        while beta.clen < l:
            beta = beta * simple_element(st, random_simple(rng, n))
        beta = delta_power(st, p) * beta
        lo, hi = summit_bounds(beta)
        if hi - lo == l:
            return beta

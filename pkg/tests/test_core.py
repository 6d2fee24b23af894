"""Normal-form arithmetic: uniqueness, prefix law, group operations."""

import random

import pytest

from garside.braid import braid_structure, parse_word, random_simple
from garside.core import (
    CanonicalElement,
    delta_power,
    identity_element,
    normalize,
    simple_element,
)

from conftest import random_element


def s3():
    return braid_structure(3)


def test_normalize_delta_word():
    st = s3()
    x = normalize(st, 0, [st.atoms[0], st.atoms[1], st.atoms[0]])
    assert (x.power, x.factors) == (1, ())


def test_normalize_empty():
    assert normalize(s3(), 0, []).is_identity


def test_normalize_weighted_pair():
    st = s3()
    s1, s2 = st.atoms
    s21 = st.mul(s2, s1)
    x = normalize(st, 0, [s21, s1])
    assert x.factors == (s21, s1)
    x.validate()


def test_normalize_idempotent_and_rebracketing(rng):
    for n in (3, 4, 5):
        st = braid_structure(n)
        for _ in range(120):
            word = [random_simple(rng, n) for _ in range(rng.randint(0, 6))]
            p = rng.randint(-2, 2)
            a = normalize(st, p, word)
            a.validate()
            assert normalize(st, a.power, list(a.factors)) == a
            # the same word folded in a random bracketing normalizes identically
            parts = [simple_element(st, f) for f in word]
            while len(parts) > 1:
                i = rng.randrange(len(parts) - 1)
                parts[i : i + 2] = [parts[i] * parts[i + 1]]
            b = delta_power(st, p) * (parts[0] if parts else identity_element(st))
            assert a == b


def test_multiply_examples():
    st = s3()
    s1, s2 = st.atoms
    e1 = simple_element(st, s1)
    assert (e1 * e1.inv()).is_identity
    assert delta_power(st, 1) * delta_power(st, 1) == delta_power(st, 2)
    assert simple_element(st, st.mul(s2, s1)) * e1 == parse_word("2 1 1", 3)


def test_invert_examples():
    st = s3()
    assert identity_element(st).inv().is_identity
    assert delta_power(st, 1).inv() == delta_power(st, -1)
    inv = simple_element(st, st.atoms[0]).inv()
    assert inv.power == -1
    assert inv.factors == (st.mul(st.atoms[0], st.atoms[1]),)


def test_invert_roundtrip(rng):
    for _ in range(150):
        a = random_element(rng, rng.choice([3, 4, 5]))
        assert (a * a.inv()).is_identity
        assert (a.inv() * a).is_identity
        assert a.inv().inv() == a


def test_conjugate_examples():
    st = s3()
    e1 = simple_element(st, st.atoms[0])
    assert e1.conj(identity_element(st)) == e1
    assert e1.conj(delta_power(st, 1)) == simple_element(st, st.atoms[1])
    assert delta_power(st, 2).conj(e1) == delta_power(st, 2)


def test_meet_delta_power_prefix_law(rng):
    st = s3()
    x = parse_word("2 1 1", 3)
    assert x.meet_delta(1) == parse_word("2 1", 3)
    assert x.meet_delta(0).is_identity
    assert x.meet_delta(5) == x
    for _ in range(100):
        a = random_element(rng, rng.choice([3, 4]))
        for q in range(a.inf, a.sup + 1):
            m = a.meet_delta(q)
            assert m.clen == q - a.inf
            assert m.divides(a)
            assert m.divides(delta_power(a.struct, q))


def test_tau_pow(rng):
    st = s3()
    e1 = simple_element(st, st.atoms[0])
    assert e1.tau_pow(1) == simple_element(st, st.atoms[1])
    for _ in range(60):
        n = rng.choice([3, 4, 5])
        a = random_element(rng, n)
        st_n = a.struct
        assert a.tau_pow(0) == a
        assert a.tau_pow(st_n.order_of_tau) == a
        assert a.tau_pow(1) == a.conj(delta_power(st_n, 1))


def test_delta_power_bounds(rng):
    # D^{inf x} divides x divides D^{sup x}
    for _ in range(80):
        a = random_element(rng, rng.choice([3, 4]))
        st = a.struct
        assert delta_power(st, a.inf).divides(a)
        assert a.divides(delta_power(st, a.sup))
        if a.clen:
            assert not delta_power(st, a.inf + 1).divides(a)
            assert not a.divides(delta_power(st, a.sup - 1))


def test_power_consistency(rng):
    for _ in range(40):
        a = random_element(rng, rng.choice([3, 4]), max_len=3)
        acc = identity_element(a.struct)
        for k in range(4):
            assert a ** k == acc
            assert a ** (-k) == acc.inv()
            acc = acc * a


def test_exponent_sum_morphism(rng):
    for _ in range(60):
        a = random_element(rng, 4)
        b = random_element(rng, 4)
        assert (a * b).exponent_sum == a.exponent_sum + b.exponent_sum
        assert a.inv().exponent_sum == -a.exponent_sum


def test_mixed_structure_rejected():
    with pytest.raises(ValueError):
        identity_element(braid_structure(3)) * identity_element(braid_structure(4))


def test_element_equality_key():
    st = s3()
    a = parse_word("1 2", 3)
    b = parse_word("1 2", 3)
    assert a == b and hash(a) == hash(b)
    assert a.key() == b.key()
    assert a != parse_word("2 1", 3)

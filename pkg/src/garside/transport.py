"""
transport: carrying conjugators along cycling steps.

For a cycling step x -> cyc_q(x) write x' = x /\ D^q and x'' = x'^{-1} x.
The pushforward and pullback of a conjugator u along the step are

    phi(u) = x'' u  /\  x'^{-1} D^q tau^q(u)
    pi(u)  = D^{inf u}  \\/  x''^{-1} u  \\/  x' D^{-q} tau^{-q}(u)

The pushforward makes the conjugation square commute: x' phi(u) = u (x^u /\ D^q),
so cyc_q(x)^{phi(u)} = cyc_q(x^u).  The pullback is its order-theoretic
adjoint.  Both preserve D-powers, preserve divisibility, and keep inf from
dropping and sup from rising, so iterating either one on arguments of the
shape D^m * simple stays in that shape and must eventually repeat.

Arguments of that shape are all the algorithms ever need, and for them both
maps reduce to pure simple-lattice calculus on the normal form of x: chains
of meets, joins, complements and quotients, one per factor.  A leading D^m
peels off through tau:  phi_{x,q}(D^m s) = D^m phi_{tau^m(x),q}(s).

Composing the single steps around a closed orbit of the order-q cycling
gives the orbit transports (pushforward forwards, pullback in reversed
nesting).  An element x^u is order-q recurrent exactly when the orbit
pushforward returns to u after finitely many rounds, which is what makes
the minimal-conjugator sweep below terminate and be correct.
"""

from __future__ import annotations

import functools
from typing import Callable, Iterable, Sequence

from .core import (
    CanonicalElement,
    GarsideStructure,
    Simple,
    delta_power,
    simple_element,
)
from .cycling import NotRecurrentError, Trajectory, closed_orbit, cyc_q, trajectory


def _phi_simple(
    s: GarsideStructure, factors: Sequence[Simple], p: int, k: int, u: Simple
) -> Simple:
    """
    Pushforward of a simple u (u != D) along the order-(p+k) cycling of
    D^p x_1...x_l, evaluated by the two normal-form chains

        a_0 = tau^p(u),  a_i = rc( (x_i /\ a_{i-1})^{-1} x_i )     i = 1..k
        b_{l+1} = u,     b_i = x_i * ( rc(x_i) /\ b_{i+1} )        i = l..k+1

    whose meet a_k /\ b_{k+1} is the pushforward.
    """
    a = s.tau_pow(u, p)
    for i in range(k):
        xi = factors[i]
        a = s.right_complement(s.left_quotient(s.meet(xi, a), xi))
    b = u
    for i in range(len(factors) - 1, k - 1, -1):
        xi = factors[i]
        b = s.mul(xi, s.meet(s.right_complement(xi), b))
    return s.meet(a, b)


def _pi_simple(
    s: GarsideStructure, factors: Sequence[Simple], p: int, k: int, u: Simple
) -> Simple:
    """
    Pullback of a simple u (u != D) along the order-(p+k) cycling, by the
    dual chains

        v_k = u,      v_{i-1} = D^{-1} (D \\/ tau^{-1}(x_i v_i))   i = k..1
        w_{k+1} = u,  w_{i+1} = x_i^{-1} (x_i \\/ w_i)             i = k+1..l

    joined as tau^{-p}(v_0) \\/ w_{l+1}.
    """
    v = u
    for i in range(k - 1, -1, -1):
        c = s.tau_pow(factors[i], -1)
        d = s.tau_pow(v, -1)
        t = s.meet(s.right_complement(c), d)
        cp = s.mul(c, t)
        dp = s.left_quotient(t, d)
        # D \/ cp*dp = cp * (rc(cp) \/ dp); prepend D^{-1} as a table product
        v = s.mul(s.delta, s.mul(cp, s.join(s.right_complement(cp), dp)))
    w = u
    for i in range(k, len(factors)):
        xi = factors[i]
        w = s.left_quotient(xi, s.join(xi, w))
    return s.join(s.tau_pow(v, -p), w)


def simple_calculus(
    x: CanonicalElement, k: int, u: Simple
) -> tuple[Simple, Simple]:
    """
    Pushforward and pullback of the simple u along the order-(inf x + k)
    cycling of x, both computed purely inside the simple-element lattice.
    """
    s = x.struct
    if not 0 <= k <= x.clen:
        raise ValueError(f"offset k={k} outside 0..{x.clen}")
    if s.is_delta(u):
        raise ValueError("u must be a simple element distinct from Delta")
    return (
        _phi_simple(s, x.factors, x.power, k, u),
        _pi_simple(s, x.factors, x.power, k, u),
    )


class TransportContext:
    """
    A cycling step x -> cyc_q(x) prepared for transporting conjugators of
    the shape D^m * simple.  Immutable once built; safe to share.
    """

    def __init__(self, x: CanonicalElement, q: int):
        self.x = x
        self.q = q
        self.struct = x.struct

    @functools.cached_property
    def x_prime(self) -> CanonicalElement:
        return self.x.meet_delta(self.q)

    @functools.cached_property
    def x_dprime(self) -> CanonicalElement:
        return self.x_prime.inv() * self.x

    @functools.cached_property
    def orbit_length(self) -> int:
        rec = closed_orbit(self.x, lambda y: cyc_q(y, self.q))
        if rec.entry_index:
            raise NotRecurrentError(f"element is not order-{self.q} recurrent")
        return rec.orbit_length

    def _shifted_factors(self, m: int) -> tuple[Simple, ...]:
        s = self.struct
        if m % s.order_of_tau == 0:
            return self.x.factors
        return tuple(s.tau_pow(f, m) for f in self.x.factors)

    def _split(self, u: CanonicalElement) -> tuple[int, Simple]:
        if u.clen > 1:
            raise ValueError("transport arguments must have canonical length <= 1")
        return u.power, (u.factors[0] if u.factors else self.struct.identity)

    def push(self, u: CanonicalElement) -> CanonicalElement:
        s, x, q = self.struct, self.x, self.q
        if q <= x.inf:
            # x /\ D^q = D^q, so phi(u) = D^{-q} u (x^u /\ D^q)
            return delta_power(s, -q) * u * x.conj(u).meet_delta(q)
        if q >= x.sup:
            # the step is trivial and phi(u) = x^{-1} u (x^u /\ D^q)
            return x.inv() * u * x.conj(u).meet_delta(q)
        m, su = self._split(u)
        phi = _phi_simple(s, self._shifted_factors(m), x.power, q - x.power, su)
        return simple_element(s, phi, m)

    def pull(self, u: CanonicalElement) -> CanonicalElement:
        s, x, q = self.struct, self.x, self.q
        if not x.inf <= q <= x.sup:
            raise ValueError(
                "pullback is only defined for orders between inf x and sup x"
            )
        m, su = self._split(u)
        pi = _pi_simple(s, self._shifted_factors(m), x.power, q - x.power, su)
        return simple_element(s, pi, m)


def pushforward(ctx: TransportContext, u: CanonicalElement) -> CanonicalElement:
    return ctx.push(u)


def pullback(ctx: TransportContext, u: CanonicalElement) -> CanonicalElement:
    return ctx.pull(u)


class OrbitTransport:
    """
    Transport around the full closed orbit of x under the order-q cycling.
    Raises NotRecurrentError unless x lies on its closed orbit.
    """

    def __init__(self, x: CanonicalElement, q: int):
        rec = closed_orbit(x, lambda y: cyc_q(y, q))
        if rec.entry_index:
            raise NotRecurrentError(f"element is not order-{q} recurrent")
        self.x = x
        self.q = q
        self.contexts = tuple(TransportContext(y, q) for y in rec.elements)

    @property
    def orbit_length(self) -> int:
        return len(self.contexts)

    def push_around(self, u: CanonicalElement) -> CanonicalElement:
        for ctx in self.contexts:
            u = ctx.push(u)
        return u

    def pull_around(self, u: CanonicalElement) -> CanonicalElement:
        for ctx in reversed(self.contexts):
            u = ctx.pull(u)
        return u


def orbit_pushforward(x: CanonicalElement, q: int, u: CanonicalElement) -> CanonicalElement:
    return OrbitTransport(x, q).push_around(u)


def orbit_pullback(x: CanonicalElement, q: int, u: CanonicalElement) -> CanonicalElement:
    return OrbitTransport(x, q).pull_around(u)


Probe = Callable[[CanonicalElement], None]


def minimal_recurrent_conjugator(
    x: CanonicalElement,
    u: CanonicalElement,
    orders: Iterable[int],
    probe: Probe | None = None,
) -> CanonicalElement:
    """
    The minimal v with u dividing v such that x^v is recurrent at every
    order in `orders` (x itself must already be recurrent at those orders;
    u must have canonical length <= 1).

    Two sweeps: ascending through the orders, iterate the orbit pullback to
    its first revisited value; then descending, iterate the orbit
    pushforward until it both revisits a value and dominates the ascending
    stage's input.  The optional probe sees every intermediate iterate.
    """
    qs = sorted(set(orders))
    transports = [OrbitTransport(x, q) for q in qs]
    stage_inputs: list[CanonicalElement] = []
    cur = u
    for ot in transports:
        stage_inputs.append(cur)
        seen = {cur}
        while True:
            cur = ot.pull_around(cur)
            if probe is not None:
                probe(cur)
            if cur in seen:
                break
            seen.add(cur)
    for ot, entering in zip(reversed(transports), reversed(stage_inputs)):
        seen = {cur}
        revisited = False
        for _ in range(100000):
            cur = ot.push_around(cur)
            if probe is not None:
                probe(cur)
            if cur in seen:
                revisited = True
            else:
                seen.add(cur)
            if revisited and entering.divides(cur):
                break
        else:
            raise RuntimeError("pushforward sweep failed to dominate its input")
    return cur


def mu(x: CanonicalElement, u: CanonicalElement) -> CanonicalElement:
    """
    The minimal v above u conjugating x into the refined summit set of x
    (x must be recurrent at every order, as from cstar_representative).
    """
    return minimal_recurrent_conjugator(x, u, range(x.inf, x.sup + 1))


class _Excluded(Exception):
    pass


def _seed_trajectories(
    x: CanonicalElement,
    orders: Sequence[int],
    interior_orders: Callable[[CanonicalElement], Iterable[int]],
) -> list[tuple[CanonicalElement, Trajectory]]:
    """
    Shared engine behind seed_trajectories, parameterized by the recurrence
    orders so the summit closures can reuse it.  Returns (conjugator,
    trajectory-of-x^conjugator) pairs covering every minimal-conjugator
    successor trajectory of x.

    An atom is dropped as soon as another still-live atom divides one of
    the transport iterates produced while minimizing it; the surviving
    atoms' trajectories cover the dropped ones.
    """
    from .cycling import _closure_trajectory

    s = x.struct
    atoms = s.atoms
    live = set(range(len(atoms)))
    out: list[tuple[CanonicalElement, Trajectory]] = []
    for idx, atom in enumerate(atoms):
        others = [j for j in sorted(live) if j != idx]

        def probe(w: CanonicalElement) -> None:
            if w.power >= 1:
                if others:
                    raise _Excluded
                return
            if w.power < 0 or not w.factors:
                return
            table = w.factors[0]
            for j in others:
                if s.atom_divides(j, table):
                    raise _Excluded

        try:
            v = minimal_recurrent_conjugator(x, simple_element(s, atom), orders, probe)
        except _Excluded:
            live.discard(idx)
            continue
        out.append((v, _closure_trajectory(x.conj(v), interior_orders)))
    return out


def seed_trajectories(x: CanonicalElement) -> list[tuple[CanonicalElement, Trajectory]]:
    """
    Trajectories adjacent to the trajectory of x inside the refined summit
    set: for each atom a (with the exclusion shortcut), minimize a to a
    conjugator v = mu_x(a) and take the full trajectory of x^v.  The result
    covers every trajectory reachable from x by a minimal simple-element
    conjugation, and is bounded in size by the number of atoms.
    """
    return _seed_trajectories(
        x,
        range(x.inf, x.sup + 1),
        lambda y: range(y.inf + 1, y.sup),
    )

"""Formal vector bundles and their characteristic classes.

A ``FormalBundle`` is a rank together with Chern classes c_1, ..., c_t known
through some truncation degree t (``depth``).  Classes above the rank are
zero, so ``chern`` holds min(rank, depth) entries.  Nothing here checks that
the data come from an actual vector bundle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from twofano.errors import InconsistentBundleError, PreconditionError, RingMismatchError
from twofano.ring import ring_exp


@dataclass(frozen=True)
class FormalBundle:
    ring: object
    rank: int
    chern: tuple
    depth: int = None

    def __post_init__(self):
        depth = self.ring.dimension if self.depth is None else min(self.depth, self.ring.dimension)
        object.__setattr__(self, "depth", depth)
        chern = tuple(self.chern)
        if self.rank < 0:
            raise PreconditionError(f"rank must be >= 0, got {self.rank}")
        if len(chern) != min(self.rank, depth):
            raise PreconditionError(
                f"expected {min(self.rank, depth)} Chern classes for rank {self.rank} "
                f"through degree {depth}, got {len(chern)}"
            )
        for i, c in enumerate(chern, start=1):
            if c.ring != self.ring:
                raise RingMismatchError(f"c_{i} lives in a different ring")
            if not c.is_homogeneous(i):
                raise PreconditionError(f"c_{i} is not homogeneous of degree {i}")
        object.__setattr__(self, "chern", chern)

    def c(self, i):
        """The i-th Chern class; zero above the rank, error above the depth."""
        if i == 0:
            return self.ring.one()
        if i > self.rank:
            return self.ring.zero()
        if i > self.depth:
            raise PreconditionError(f"c_{i} is not known (depth {self.depth})")
        return self.chern[i - 1]

    @property
    def c1(self):
        return self.c(1)

    @property
    def c2(self):
        return self.c(2)

    def total_chern(self):
        return sum((self.c(i) for i in range(1, min(self.rank, self.depth) + 1)), self.ring.one())


@dataclass(frozen=True)
class ChernCharacter:
    """Graded pieces ch_0, ..., ch_top of a Chern character."""

    ring: object
    pieces: tuple

    @property
    def top(self):
        return len(self.pieces) - 1

    @property
    def rank(self):
        return self.pieces[0].coefficient(self.ring.basis(0)[0])

    def piece(self, k):
        return self.pieces[k]

    def total(self):
        return sum(self.pieces, self.ring.zero())

    def __add__(self, other):
        _same_ring(self.ring, other.ring)
        top = min(self.top, other.top)
        return ChernCharacter(
            self.ring, tuple(self.pieces[k] + other.pieces[k] for k in range(top + 1))
        )

    def __mul__(self, other):
        _same_ring(self.ring, other.ring)
        top = min(self.top, other.top)
        pieces = tuple(
            sum((self.pieces[i] * other.pieces[k - i] for i in range(k + 1)), self.ring.zero())
            for k in range(top + 1)
        )
        return ChernCharacter(self.ring, pieces)


def _same_ring(a, b):
    if a != b:
        raise RingMismatchError(f"bundles live on different rings: {a!r} vs {b!r}")


def _graded_pieces(total, top):
    return [total.component(k) for k in range(top + 1)]


def trivial_bundle(ring, rank, depth=None):
    d = ring.dimension if depth is None else min(depth, ring.dimension)
    return FormalBundle(ring, rank, (ring.zero(),) * min(rank, d), depth)


def line_bundle(c1, depth=None):
    if not c1.is_homogeneous(1):
        raise PreconditionError("c_1 of a line bundle must be homogeneous of degree 1")
    ring = c1.ring
    d = ring.dimension if depth is None else min(depth, ring.dimension)
    return FormalBundle(ring, 1, (c1,) if d >= 1 else (), depth)


def from_total_chern(ring, rank, total, depth=None):
    """Bundle of the given rank whose total Chern class is ``total``.

    Nonzero classes above the rank (within the depth) are inconsistent.
    """
    d = ring.dimension if depth is None else min(depth, ring.dimension)
    pieces = _graded_pieces(total, d)
    if pieces[0] != ring.one():
        raise InconsistentBundleError("total Chern class must start with 1")
    for k in range(rank + 1, d + 1):
        if pieces[k]:
            raise InconsistentBundleError(
                f"rank {rank} bundle would have nonzero c_{k} = {pieces[k]}"
            )
    return FormalBundle(ring, rank, tuple(pieces[1 : min(rank, d) + 1]), d)


def chern_character(E, top=2):
    """Chern character of E through degree ``top``, via Newton's identities.

    With e_i the Chern classes and p_k the power sums of the Chern roots,
    p_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i},
    and ch_k = p_k / k!.
    """
    ring = E.ring
    if top > ring.dimension:
        raise PreconditionError(f"top={top} exceeds ring dimension {ring.dimension}")
    if top > E.depth and top <= E.rank:
        raise PreconditionError(f"Chern classes known only through degree {E.depth}")
    power = [ring.scalar(E.rank)]
    for k in range(1, top + 1):
        p = E.c(k) * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            p = p + E.c(i) * power[k - i] * (-1) ** (i - 1)
        power.append(p)
    pieces = tuple(power[k] / math.factorial(k) for k in range(top + 1))
    return ChernCharacter(ring, pieces)


def bundle_from_character(ch, depth=None):
    """Inverse of ``chern_character``: recover c_1..c_t from ch_0..ch_t.

    Uses k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i with p_i = i! ch_i.
    """
    ring = ch.ring
    rank = ch.rank
    if rank.denominator != 1 or rank < 0:
        raise InconsistentBundleError(f"ch_0 = {rank} is not a valid rank")
    rank = int(rank)
    d = ch.top if depth is None else min(depth, ch.top)
    power = [None] + [ch.pieces[i] * math.factorial(i) for i in range(1, d + 1)]
    elementary = [ring.one()]
    for k in range(1, d + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            acc = acc + elementary[k - i] * power[i] * (-1) ** (i - 1)
        elementary.append(acc / k)
    total = sum(elementary, ring.zero())
    return from_total_chern(ring, rank, total, d)


def whitney_sum(E, F):
    _same_ring(E.ring, F.ring)
    depth = min(E.depth, F.depth)
    total = _truncate(E.total_chern() * F.total_chern(), depth)
    return from_total_chern(E.ring, E.rank + F.rank, total, depth)


def bundle_quotient(E, S):
    """The Q in 0 -> S -> E -> Q -> 0, i.e. c(Q) = c(E) / c(S).

    Division is done degree by degree; a nonzero class of Q above its rank
    means the sequence data is inconsistent.
    """
    _same_ring(E.ring, S.ring)
    if S.rank > E.rank:
        raise PreconditionError(f"sub-bundle rank {S.rank} exceeds rank {E.rank}")
    ring = E.ring
    depth = min(E.depth, S.depth)
    quotient = [ring.one()]
    for k in range(1, depth + 1):
        q = E.c(k) if k <= E.rank else ring.zero()
        for i in range(1, min(k, S.rank) + 1):
            q = q - S.c(i) * quotient[k - i]
        quotient.append(q)
    return from_total_chern(ring, E.rank - S.rank, sum(quotient, ring.zero()), depth)


def tensor_line(E, c1L):
    """E (x) L for a line bundle with first Chern class c1L.

    c_k(E (x) L) = sum_{i<=k} binom(r - i, k - i) c_i(E) c1L^(k-i).
    """
    if c1L.ring != E.ring:
        raise RingMismatchError("line bundle class lives in a different ring")
    if not c1L.is_homogeneous(1):
        raise PreconditionError("c1(L) must be homogeneous of degree 1")
    r = E.rank
    ring = E.ring
    chern = []
    for k in range(1, min(r, E.depth) + 1):
        c = ring.zero()
        for i in range(k + 1):
            c = c + E.c(i) * c1L ** (k - i) * math.comb(r - i, k - i)
        chern.append(c)
    return FormalBundle(ring, r, tuple(chern), E.depth)


def dual(E):
    return FormalBundle(E.ring, E.rank, tuple(c * (-1) ** i for i, c in enumerate(E.chern, 1)), E.depth)


def tensor(E, F):
    """E (x) F computed through Chern characters."""
    _same_ring(E.ring, F.ring)
    depth = min(E.depth, F.depth)
    top = min(depth, E.ring.dimension)
    ch = chern_character(E, top) * chern_character(F, top)
    return bundle_from_character(ch, depth)


def line_character(c1, top):
    """ch(L) = exp(c1) through degree ``top``."""
    return ChernCharacter(c1.ring, tuple(_graded_pieces(ring_exp(c1), top)))


def pullback_bundle(E, pull, target_ring):
    """Pull E back along a ring map ``pull`` into ``target_ring``.

    A bundle known through the full base dimension stays fully known on the
    target, since its classes vanish above the base dimension.
    """
    depth = target_ring.dimension if E.depth >= E.ring.dimension else E.depth
    depth = min(depth, target_ring.dimension)
    chern = [pull(c) for c in E.chern]
    chern += [target_ring.zero()] * (min(E.rank, depth) - len(chern))
    return FormalBundle(target_ring, E.rank, tuple(chern[: min(E.rank, depth)]), depth)


def _truncate(cls, degree):
    return sum((cls.component(k) for k in range(degree + 1)), cls.ring.zero())


"""Catalog of spaces: (weighted) projective spaces, complete intersections,
Grassmannians, products and split P^1-bundles.

Every constructor returns a :class:`Space` holding the Chow ring, the
tangent bundle as a :class:`~twofano.chern.FormalBundle` and finite lists of
cone generators.  Cone generators are stored as pairing representatives:
a curve generator is a class of degree ``dimension - 1`` and a surface
generator a class of degree ``dimension - 2``, so that pairing a divisor
(resp. a codimension-2 class) against the cycle is ``integrate(cls * gen)``.

``depth`` limits how many Chern classes of the tangent bundle are computed;
``None`` means all of them.  Classification needs only c_1 and c_2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from twofano.chern import (
    FormalBundle,
    bundle_quotient,
    dual,
    line_bundle,
    pullback_bundle,
    tensor,
    tensor_line,
    trivial_bundle,
    whitney_sum,
)
from twofano.errors import PreconditionError, RingMismatchError
from twofano.ring import (
    BundleRing,
    GradedClass,
    ProductRing,
    TruncatedPolynomialRing,
    format_rational,
    integrate,
)
from twofano.schubert import SchubertRing


class ConeGenerator(NamedTuple):
    label: str
    cls: GradedClass


@dataclass(frozen=True)
class Space:
    label: str
    dimension: int
    ring: object
    tangent: FormalBundle
    picard_generators: tuple
    curve_cone: tuple
    surface_cone: tuple
    # ample generator of the Picard group when it has rank one
    ample_generator: GradedClass = None

    def __post_init__(self):
        if self.tangent.rank != self.dimension:
            raise PreconditionError(
                f"tangent rank {self.tangent.rank} != dimension {self.dimension}"
            )
        for gen in self.curve_cone:
            _check_degree(gen, self.dimension - 1, "curve")
        for gen in self.surface_cone:
            _check_degree(gen, self.dimension - 2, "surface")

    def describe(self):
        """Structured text description of the space and its verdict inputs."""
        from twofano.chern import chern_character

        top = min(2, self.dimension)
        ch = chern_character(self.tangent, top)
        ch2 = ch.piece(2) if top >= 2 else self.ring.zero()
        lines = [
            f"label: {self.label}",
            f"dimension: {self.dimension}",
            f"ring: {self.ring.kind}",
            f"degree: {format_rational(integrate(self.ample_generator ** self.dimension))}"
            if self.ample_generator is not None
            else "degree: n/a",
            f"c1: {self.tangent.c1}",
            f"ch2: {ch2}",
        ]
        lines += [f"curve {g.label}: {g.cls}" for g in self.curve_cone]
        lines += [f"surface {g.label}: {g.cls}" for g in self.surface_cone]
        return "\n".join(lines)


def _check_degree(gen, degree, what):
    if not gen.cls.is_homogeneous(degree) or gen.cls.is_zero():
        raise PreconditionError(
            f"{what} generator {gen.label} must be a nonzero class of degree {degree}"
        )


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    weights: tuple
    degrees: tuple = ()

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        degrees = tuple(int(d) for d in self.degrees)
        if not weights:
            raise PreconditionError("weight list is empty")
        if any(w < 1 for w in weights):
            raise PreconditionError(f"weights must be positive, got {weights}")
        if any(d < 1 for d in degrees):
            raise PreconditionError(f"degrees must be positive, got {degrees}")
        if len(degrees) >= len(weights) - 1:
            raise PreconditionError(
                f"{len(degrees)} equations in a space of dimension {len(weights) - 1} "
                "leave no positive-dimensional intersection"
            )
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def projective(cls, n, degrees=()):
        return cls((1,) * (n + 1), tuple(degrees))

    @property
    def n(self):
        return len(self.weights) - 1

    @property
    def r(self):
        return len(self.degrees)

    @property
    def weighted(self):
        return any(w != 1 for w in self.weights)


@dataclass(frozen=True)
class GrassmannianSpec:
    """Grass(k, n) of k-planes in an n-dimensional space, normalized to n >= 2k."""

    k: int
    n: int

    def __post_init__(self):
        if self.n < 2 or not 1 <= self.k <= self.n - 1:
            raise PreconditionError(f"need 1 <= k <= n-1 and n >= 2, got k={self.k}, n={self.n}")
        if self.n < 2 * self.k:
            object.__setattr__(self, "k", self.n - self.k)


@dataclass(frozen=True)
class BundleSpec:
    base: Space
    c1L: GradedClass


def _ambient_label(weights):
    if all(w == 1 for w in weights):
        return f"P^{len(weights) - 1}"
    return "P(" + ",".join(map(str, weights)) + ")"


def _sum_of_lines(ring, coefficients, depth):
    H = ring.gen()
    bundle = trivial_bundle(ring, 0, depth)
    for a in coefficients:
        bundle = whitney_sum(bundle, line_bundle(H * a, depth))
    return bundle


def _hypersurface_cones(ring, dimension):
    H = ring.gen()
    curve = H ** (dimension - 1)
    curves = (ConeGenerator(f"[{curve}]", curve),)
    surfaces = ()
    if dimension >= 2:
        surface = H ** (dimension - 2)
        surfaces = (ConeGenerator(f"[{surface}]", surface),)
    return curves, surfaces


def make_projective(n, depth=None):
    """P^n with its Euler-sequence tangent bundle O(1)^{n+1} / O."""
    if n < 1:
        raise PreconditionError(f"projective space needs n >= 1, got {n}")
    return make_weighted_projective((1,) * (n + 1), depth)


def make_weighted_projective(weights, depth=None):
    """Weighted projective space over Q: Q[H]/(H^{n+1}) with int H^n = 1/prod(w)."""
    weights = tuple(weights)
    if not weights:
        raise PreconditionError("weight list is empty")
    if any(w < 1 for w in weights):
        raise PreconditionError(f"weights must be positive, got {weights}")
    n = len(weights) - 1
    if n < 1:
        raise PreconditionError("weighted projective space needs at least two weights")
    return make_complete_intersection(CompleteIntersectionSpec(weights, ()), depth)


def make_complete_intersection(spec, depth=None):
    """Complete intersection of type ``spec.degrees`` in the weighted ambient space.

    T_X is the quotient of T_P|_X by the normal bundle sum O(d_j), and T_P is
    the quotient of sum O(w_i) by O.
    """
    n, r = spec.n, spec.r
    dim = n - r
    if dim < 1:
        raise PreconditionError(f"complete intersection of dimension {dim} is not allowed")
    degree = Fraction(math.prod(spec.degrees), math.prod(spec.weights))
    ring = TruncatedPolynomialRing(dim, degree)
    H = ring.gen()
    euler = _sum_of_lines(ring, spec.weights, depth)
    tangent_ambient = bundle_quotient(euler, trivial_bundle(ring, 1, depth))
    tangent = bundle_quotient(tangent_ambient, _sum_of_lines(ring, spec.degrees, depth))
    ambient = _ambient_label(spec.weights)
    if spec.degrees:
        label = "X_" + ",".join(map(str, spec.degrees)) + f" in {ambient}"
    else:
        label = ambient
    curves, surfaces = _hypersurface_cones(ring, dim)
    return Space(
        label=label,
        dimension=dim,
        ring=ring,
        tangent=tangent,
        picard_generators=(H,),
        curve_cone=curves,
        surface_cone=surfaces,
        ample_generator=H,
    )


def make_grassmannian(spec, depth=None):
    """Grass(k, n) with T = S^dual (x) Q, in the Schubert basis.

    c(Q) = 1 + sigma_1 + ... + sigma_{n-k} and c(S^dual) = 1 + sigma_1 +
    sigma_{1,1} + ... + sigma_{1^k}.
    """
    k, n = spec.k, spec.n
    ring = SchubertRing(k, n)
    dim = ring.dimension
    d = dim if depth is None else min(depth, dim)
    quotient = FormalBundle(ring, n - k, tuple(ring.sigma(i) for i in range(1, min(n - k, d) + 1)), d)
    sub_dual = FormalBundle(ring, k, tuple(ring.sigma(*([1] * i)) for i in range(1, min(k, d) + 1)), d)
    tangent = tensor(sub_dual, quotient)

    def dual_of(*parts):
        return ring.element(ring.partition(parts).complement().parts)

    curves = (ConeGenerator("dual s[1]", dual_of(1)),)
    surfaces = []
    if n - k >= 2:
        surfaces.append(ConeGenerator("dual s[2]", dual_of(2)))
    if k >= 2:
        surfaces.append(ConeGenerator("dual s[1,1]", dual_of(1, 1)))
    return Space(
        label=f"G({k},{n})",
        dimension=dim,
        ring=ring,
        tangent=tangent,
        picard_generators=(ring.sigma(1),),
        curve_cone=curves,
        surface_cone=tuple(surfaces),
        ample_generator=ring.sigma(1),
    )


def _wrap(label):
    return f"({label})" if " " in label else label


def make_product(A, B):
    """A x B with the Kunneth ring and T = pr_1^* T_A + pr_2^* T_B."""
    ring = ProductRing(A.ring, B.ring)
    tangent = whitney_sum(
        pullback_bundle(A.tangent, ring.pull_left, ring),
        pullback_bundle(B.tangent, ring.pull_right, ring),
    )
    pt_a, pt_b = A.ring.point_class(), B.ring.point_class()
    la, lb = _wrap(A.label), _wrap(B.label)
    curves = tuple(ConeGenerator(f"{g.label} x pt", ring.tensor(g.cls, pt_b)) for g in A.curve_cone)
    curves += tuple(ConeGenerator(f"pt x {g.label}", ring.tensor(pt_a, g.cls)) for g in B.curve_cone)
    surfaces = tuple(ConeGenerator(f"{g.label} x pt", ring.tensor(g.cls, pt_b)) for g in A.surface_cone)
    surfaces += tuple(ConeGenerator(f"pt x {g.label}", ring.tensor(pt_a, g.cls)) for g in B.surface_cone)
    surfaces += tuple(
        ConeGenerator(f"{a.label} x {b.label}", ring.tensor(a.cls, b.cls))
        for a in A.curve_cone
        for b in B.curve_cone
    )
    picard = tuple(ring.pull_left(h) for h in A.picard_generators)
    picard += tuple(ring.pull_right(h) for h in B.picard_generators)
    return Space(
        label=f"{la} x {lb}",
        dimension=A.dimension + B.dimension,
        ring=ring,
        tangent=tangent,
        picard_generators=picard,
        curve_cone=curves,
        surface_cone=surfaces,
    )


def make_p1_bundle(spec):
    """The P^1-bundle Y = P(O + L^dual) over ``spec.base``.

    With xi = c_1(O(1)) the relation is xi^2 = c_1(L) xi, and the relative
    tangent bundle is (pi^*(O + L^dual)) (x) O(1) / O, with c_1 = 2 xi - c_1(L).
    The zero section (image of O) has class xi - c_1(L), the infinity
    section (image of L^dual) has class xi.
    """
    base, c1L = spec.base, spec.c1L
    if c1L.ring != base.ring:
        raise RingMismatchError("c1(L) must be a class on the base")
    if not c1L.is_homogeneous(1):
        raise PreconditionError("c1(L) must be homogeneous of degree 1")
    for g in base.curve_cone:
        value = integrate(c1L * g.cls)
        if value < 0:
            raise PreconditionError(
                f"L is not nef: c1(L) . {g.label} = {format_rational(value)}"
            )
    ring = BundleRing(base.ring, c1L)
    xi = ring.xi()
    L = ring.pullback(c1L)
    depth = base.tangent.depth if base.tangent.depth < base.dimension else None
    split = whitney_sum(trivial_bundle(ring, 1, depth), dual(line_bundle(L, depth)))
    relative = bundle_quotient(tensor_line(split, xi), trivial_bundle(ring, 1, depth))
    tangent = whitney_sum(pullback_bundle(base.tangent, ring.pullback, ring), relative)

    zero_section = xi - L
    curves = (ConeGenerator("fiber", ring.pullback(base.ring.point_class())),)
    surfaces = ()
    for g in base.curve_cone:
        curves += (
            ConeGenerator(f"s0({g.label})", ring.pullback(g.cls) * zero_section),
            ConeGenerator(f"s_inf({g.label})", ring.pullback(g.cls) * xi),
        )
        surfaces += (ConeGenerator(f"pi^-1({g.label})", ring.pullback(g.cls)),)
    for g in base.surface_cone:
        surfaces += (
            ConeGenerator(f"s0({g.label})", ring.pullback(g.cls) * zero_section),
            ConeGenerator(f"s_inf({g.label})", ring.pullback(g.cls) * xi),
        )
    picard = tuple(ring.pullback(h) for h in base.picard_generators) + (xi,)
    return Space(
        label=f"P(O + L^dual) over {_wrap(base.label)}, c1(L) = {c1L}",
        dimension=base.dimension + 1,
        ring=ring,
        tangent=tangent,
        picard_generators=picard,
        curve_cone=curves,
        surface_cone=surfaces,
    )

"""Positivity verdicts for catalog spaces and the closed-form criteria they
are compared against.

A space is Fano when c_1(T) pairs strictly positively with every curve
generator, and 2-Fano when it is Fano and ch_2(T) pairs nonnegatively with
every surface generator.  Every verdict keeps the pairings it was decided
from, and a pairing that is exactly zero raises ``boundary_flag``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from twofano.chern import chern_character
from twofano.errors import PreconditionError
from twofano.ring import integrate


class Witness(NamedTuple):
    kind: str  # "c1" (against a curve) or "ch2" (against a surface)
    label: str
    value: Fraction


@dataclass(frozen=True)
class ClassificationRecord:
    label: str
    dimension: int
    is_fano: bool
    is_two_fano: bool
    is_ch2_strictly_positive: bool
    fano_index: Fraction
    witness_pairings: tuple
    boundary_flag: bool

    def pairings(self, kind):
        return [w for w in self.witness_pairings if w.kind == kind]


def tangent_c1_ch2(space):
    """(c_1(T), ch_2(T)); ch_2 is zero on curves."""
    c1 = space.tangent.c1
    if space.dimension < 2:
        return c1, space.ring.zero()
    return c1, chern_character(space.tangent, 2).piece(2)


def classify(space):
    c1, ch2 = tangent_c1_ch2(space)
    curves = tuple(Witness("c1", g.label, integrate(c1 * g.cls)) for g in space.curve_cone)
    surfaces = tuple(Witness("ch2", g.label, integrate(ch2 * g.cls)) for g in space.surface_cone)
    is_fano = bool(curves) and all(w.value > 0 for w in curves)
    nef = all(w.value >= 0 for w in surfaces)
    strict = all(w.value > 0 for w in surfaces)
    return ClassificationRecord(
        label=space.label,
        dimension=space.dimension,
        is_fano=is_fano,
        is_two_fano=is_fano and nef,
        is_ch2_strictly_positive=is_fano and strict,
        fano_index=fano_index(space),
        witness_pairings=curves + surfaces,
        boundary_flag=any(w.value == 0 for w in curves + surfaces),
    )


def fano_index(space):
    """Fano index as a computable lower-bound proxy for the pseudo-index.

    For Picard rank one this is c_1(T) divided by the ample generator; for
    products and bundles it is the least pairing of c_1(T) with a curve
    generator.  Returns ``None`` when the value is not positive.
    """
    c1 = space.tangent.c1
    gen = space.ample_generator
    if gen is not None:
        (b, coefficient), = gen.terms.items()
        value = c1.coefficient(b) / coefficient
        if c1 != gen * value:
            raise PreconditionError("c_1(T) is not a multiple of the ample generator")
    else:
        value = min(integrate(c1 * g.cls) for g in space.curve_cone)
    return value if value > 0 else None


def oracle_ci_fano(spec):
    return sum(spec.degrees) <= spec.n


def oracle_ci_two_fano(spec):
    return sum(d * d for d in spec.degrees) <= spec.n


def oracle_grassmannian_two_fano(spec):
    k, n = spec.k, spec.n
    if n < 2 * k:
        raise PreconditionError(f"expected n >= 2k, got k={k}, n={n}")
    return k == 1 or n == 2 * k or n == 2 * k + 1


def oracle_bundle_fano(base, c1L):
    """P(O + L^dual) is Fano iff c_1(T_X) - c_1(L) is ample."""
    diff = base.tangent.c1 - c1L
    return all(integrate(diff * g.cls) > 0 for g in base.curve_cone)


def oracle_bundle_two_fano(base, c1L):
    """Assuming P(O + L^dual) is Fano: 2-Fano iff ch_2(T_X) + c_1(L)^2 / 2 is nef."""
    _, ch2 = tangent_c1_ch2(base)
    twisted = ch2 + c1L * c1L / 2
    return all(integrate(twisted * g.cls) >= 0 for g in base.surface_cone)


@dataclass(frozen=True)
class Lemma3Input:
    ch2_deg: Fraction
    c1sq_deg: Fraction
    e: int
    dim_x: int
    genus: int
    marked: int

    def __post_init__(self):
        if self.e < 1:
            raise PreconditionError(f"e must be >= 1, got {self.e}")
        if self.dim_x < 1:
            raise PreconditionError(f"dim(X) must be >= 1, got {self.dim_x}")
        if self.genus < 0 or self.marked < 0:
            raise PreconditionError("genus and number of marked points must be >= 0")
        object.__setattr__(self, "ch2_deg", Fraction(self.ch2_deg))
        object.__setattr__(self, "c1sq_deg", Fraction(self.c1sq_deg))


def lemma3_terms(inp):
    """The three summands of the deformation-dimension lower bound."""
    return (
        inp.ch2_deg,
        inp.c1sq_deg / (2 * inp.e),
        Fraction((inp.e + inp.dim_x - 3) * (1 - inp.genus - inp.marked)),
    )


def lemma3_bound(inp):
    """deg ch_2 + deg c_1^2 / (2e) + (e + dim X - 3)(1 - g(C) - #B)."""
    return sum(lemma3_terms(inp), Fraction(0))


def bend_and_break_degree(space, surface_class, e):
    """int ch_2(T) . S + (1/2e) int c_1(T)^2 . S for a surface class S."""
    if e < 1:
        raise PreconditionError(f"e must be >= 1, got {e}")
    if surface_class.ring != space.ring or not surface_class.is_homogeneous(space.dimension - 2):
        raise PreconditionError(
            f"surface class must be homogeneous of degree {space.dimension - 2}"
        )
    c1, ch2 = tangent_c1_ch2(space)
    return integrate(ch2 * surface_class) + integrate(c1 * c1 * surface_class) / (2 * e)

"""Exact Chern-character calculus and 2-Fano verdicts for catalog spaces."""

from twofano.chern import (
    ChernCharacter,
    FormalBundle,
    bundle_quotient,
    chern_character,
    tensor_line,
    whitney_sum,
)
from twofano.classify import (
    ClassificationRecord,
    Lemma3Input,
    bend_and_break_degree,
    classify,
    fano_index,
    lemma3_bound,
    oracle_bundle_two_fano,
    oracle_ci_fano,
    oracle_ci_two_fano,
    oracle_grassmannian_two_fano,
)
from twofano.ring import GradedClass, integrate, ring_add, ring_exp, ring_mul
from twofano.schubert import Partition, pieri_multiply
from twofano.spaces import (
    BundleSpec,
    CompleteIntersectionSpec,
    GrassmannianSpec,
    Space,
    make_complete_intersection,
    make_grassmannian,
    make_p1_bundle,
    make_product,
    make_projective,
    make_weighted_projective,
)

__version__ = "0.1.0"

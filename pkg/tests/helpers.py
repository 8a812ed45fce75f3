"""Independent oracles and random generators shared by the tests.

Nothing here calls the code paths it is used to check: Pieri expansions are
found by enumerating every partition in the box, Gaussian binomials by
the q-Pascal recurrence, Grassmannian degrees by the hook formula, and
complete-intersection characters by the closed-form Euler-sequence sums.
"""

import itertools
import math
import random
from fractions import Fraction

from twofano.chern import FormalBundle
from twofano.ring import GradedClass
from twofano.spaces import (
    BundleSpec,
    CompleteIntersectionSpec,
    GrassmannianSpec,
    make_complete_intersection,
    make_grassmannian,
    make_p1_bundle,
    make_product,
    make_projective,
    make_weighted_projective,
)


def all_box_partitions(rows, cols):
    """Every weakly decreasing tuple in the box, trailing zeros stripped."""
    out = set()
    for parts in itertools.product(range(cols + 1), repeat=rows):
        if all(a >= b for a, b in zip(parts, parts[1:])):
            out.add(tuple(p for p in parts if p))
    return out


def brute_force_pieri(lam, m, rows, cols):
    """sigma_lam * sigma_m by checking every box partition for a horizontal strip."""
    lam = tuple(lam) + (0,) * (rows - len(lam))
    result = {}
    for mu in all_box_partitions(rows, cols):
        padded = mu + (0,) * (rows - len(mu))
        if sum(padded) != sum(lam) + m:
            continue
        if any(a < b for a, b in zip(padded, lam)):
            continue
        # horizontal strip: at most one added box per column
        if any(padded[i + 1] > lam[i] for i in range(rows - 1)):
            continue
        result[mu] = 1
    return result


def gaussian_binomial(n, k):
    """Coefficients of [n choose k]_q via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return [0]
    if k == 0 or k == n:
        return [1]
    a = gaussian_binomial(n - 1, k - 1)
    b = [0] * k + gaussian_binomial(n - 1, k)
    size = max(len(a), len(b))
    a += [0] * (size - len(a))
    b += [0] * (size - len(b))
    return [x + y for x, y in zip(a, b)]


def grassmannian_degree(k, n):
    """deg G(k,n) in the Pluecker embedding: N! prod_{i<k} i! / (n-k+i)!."""
    N = k * (n - k)
    num = math.factorial(N)
    for i in range(k):
        num *= math.factorial(i)
    den = 1
    for i in range(k):
        den *= math.factorial(n - k + i)
    return Fraction(num, den)


def ci_closed_form(weights, degrees):
    """(c1 coefficient, ch2 coefficient) of T_X from ch = sum e^{wH} - 1 - sum e^{dH}."""
    c1 = sum(weights) - sum(degrees)
    ch2 = Fraction(sum(w * w for w in weights) - sum(d * d for d in degrees), 2)
    return c1, ch2


def random_class(ring, rng, degree=None, density=0.6, span=5):
    terms = {}
    degrees = range(ring.dimension + 1) if degree is None else [degree]
    for d in degrees:
        for b in ring.basis(d):
            if rng.random() < density:
                terms[b] = Fraction(rng.randint(-span, span), rng.choice((1, 1, 2, 3)))
    return GradedClass(ring, terms)


def random_nilpotent(ring, rng):
    cls = random_class(ring, rng)
    return cls - cls.component(0)


def random_bundle(ring, rng, max_rank=4):
    rank = rng.randint(0, max_rank)
    chern = tuple(random_class(ring, rng, degree=i) for i in range(1, min(rank, ring.dimension) + 1))
    return FormalBundle(ring, rank, chern)


def catalog_spaces():
    """A fixed sample covering every ring kind."""
    cubic = make_complete_intersection(CompleteIntersectionSpec.projective(5, (3,)))
    return {
        "P^4": make_projective(4),
        "P(1,1,2,3)": make_weighted_projective((1, 1, 2, 3)),
        "cubic fourfold": cubic,
        "G(2,4)": make_grassmannian(GrassmannianSpec(2, 4)),
        "G(2,5)": make_grassmannian(GrassmannianSpec(2, 5)),
        "P^2 x P^1": make_product(make_projective(2), make_projective(1)),
        "Y over cubic": make_p1_bundle(BundleSpec(cubic, 2 * cubic.ring.gen())),
    }


def seeded(seed):
    return random.Random(seed)

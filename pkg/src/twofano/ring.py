"""Exact graded Chow rings with rational coefficients.

Every ring here is finite dimensional over Q and presented by a basis of
homogeneous elements together with structure constants for multiplying two
basis elements.  The catalog rings are

* ``TruncatedPolynomialRing``  Q[H]/(H^{n+1}) with a chosen value of the integral of H^n,
* ``SchubertRing``             (see :mod:`twofano.schubert`) the Grassmannian ring in the Schubert basis,
* ``ProductRing``              the Kunneth tensor product of two rings,
* ``BundleRing``               R[xi]/(xi^2 - c1(L) xi) for the split P^1-bundle P(O + L^dual).

Each of them has a one dimensional top degree, so integration is the
coefficient of the top basis element times ``fundamental_degree``.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType

from twofano.errors import PreconditionError, RingMismatchError

_SCALARS = (int, Fraction)


class ChowRing:
    """A graded commutative Q-algebra with a finite homogeneous basis.

    Subclasses define ``key``, ``_basis``, ``_basis_product``, ``degree_of``,
    ``basis_name`` and ``top_basis``.  Structure constants are memoized per
    instance; the cache is only ever filled with values that are a pure
    function of the arguments, so concurrent readers are safe.
    """

    kind = "abstract"

    def __init__(self, dimension, fundamental_degree, generators, relations=()):
        if dimension < 0:
            raise PreconditionError(f"dimension must be >= 0, got {dimension}")
        self.dimension = dimension
        self.fundamental_degree = Fraction(fundamental_degree)
        self.generators = tuple(generators)
        self.relations = tuple(relations)
        self._product_cache = {}
        self._basis_cache = {}

    @property
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        if not isinstance(other, ChowRing):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"{type(self).__name__}(dimension={self.dimension})"

    # basis data ---------------------------------------------------------

    def basis(self, degree):
        if degree < 0 or degree > self.dimension:
            return ()
        try:
            return self._basis_cache[degree]
        except KeyError:
            result = self._basis_cache[degree] = tuple(self._basis(degree))
            return result

    def full_basis(self):
        return tuple(b for d in range(self.dimension + 1) for b in self.basis(d))

    def basis_product(self, a, b):
        """Structure constants of ``a * b`` as a read-only mapping."""
        cache_key = (a, b) if a <= b else (b, a)
        try:
            return self._product_cache[cache_key]
        except KeyError:
            pass
        if self.degree_of(a) + self.degree_of(b) > self.dimension:
            product = {}
        else:
            product = {k: Fraction(v) for k, v in self._basis_product(*cache_key).items() if v}
        result = self._product_cache[cache_key] = MappingProxyType(product)
        return result

    def integral_of_basis(self, b):
        return self.fundamental_degree if b == self.top_basis else Fraction(0)

    def _basis(self, degree):
        raise NotImplementedError

    def _basis_product(self, a, b):
        raise NotImplementedError

    def degree_of(self, b):
        raise NotImplementedError

    def basis_name(self, b):
        raise NotImplementedError

    @property
    def top_basis(self):
        raise NotImplementedError

    # element constructors -----------------------------------------------

    def zero(self):
        return GradedClass(self, {})

    def one(self):
        return GradedClass(self, {self.basis(0)[0]: 1})

    def scalar(self, value):
        return GradedClass(self, {self.basis(0)[0]: value})

    def element(self, b, coefficient=1):
        if self.degree_of(b) > self.dimension:
            return self.zero()
        return GradedClass(self, {b: coefficient})

    def point_class(self):
        """Top-degree class with integral one."""
        return GradedClass(self, {self.top_basis: 1 / self.fundamental_degree})


class GradedClass:
    """An element of a ``ChowRing``, stored as sparse basis coefficients.

    Instances are immutable.  Arithmetic with classes of another ring
    raises :class:`RingMismatchError`.
    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms):
        cleaned = {}
        for b, c in terms.items():
            c = Fraction(c)
            if c and ring.degree_of(b) <= ring.dimension:
                cleaned[b] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("GradedClass is immutable")

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, b):
        return self._terms.get(b, Fraction(0))

    def component(self, degree):
        return GradedClass(
            self.ring, {b: c for b, c in self._terms.items() if self.ring.degree_of(b) == degree}
        )

    def components(self):
        """Map from degree to the basis-coefficient vector in that degree."""
        out = {}
        for d in self.degrees():
            out[d] = tuple(self.coefficient(b) for b in self.ring.basis(d))
        return out

    def degrees(self):
        return sorted({self.ring.degree_of(b) for b in self._terms})

    def is_zero(self):
        return not self._terms

    def is_homogeneous(self, degree=None):
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs[0] == degree)

    @property
    def degree(self):
        """Degree of a nonzero homogeneous class, else ``None``."""
        degs = self.degrees()
        return degs[0] if len(degs) == 1 else None

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine classes of {self.ring!r} and {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = self.ring.scalar(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for b, c in other._terms.items():
            terms[b] = terms.get(b, 0) + c
        return GradedClass(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.ring, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = self.ring.scalar(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return GradedClass(self.ring, {b: c * other for b, c in self._terms.items()})
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check(other)
        ring = self.ring
        terms = {}
        for a, ca in self._terms.items():
            da = ring.degree_of(a)
            for b, cb in other._terms.items():
                if da + ring.degree_of(b) > ring.dimension:
                    continue
                for k, v in ring.basis_product(a, b).items():
                    terms[k] = terms.get(k, 0) + ca * cb * v
        return GradedClass(ring, terms)

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise PreconditionError("only nonnegative integer powers are supported")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = self.ring.scalar(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def sorted_terms(self):
        ring = self.ring
        return sorted(self._terms.items(), key=lambda t: (ring.degree_of(t[0]), t[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for b, c in self.sorted_terms():
            name = self.ring.basis_name(b)
            coef = format_rational(abs(c))
            if name == "1":
                body = coef
            elif abs(c) == 1:
                body = name
            else:
                body = f"{coef}*{name}"
            parts.append(("-" if c < 0 else "+", body))
        text = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"GradedClass({self})"


def format_rational(q):
    """Render a rational as ``p`` or ``p/q``; never as a decimal."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def ring_add(a, b):
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot add classes of {a.ring!r} and {b.ring!r}")
    return a + b


def ring_mul(a, b):
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot multiply classes of {a.ring!r} and {b.ring!r}")
    return a * b


def ring_exp(a):
    """Truncated exponential sum_k a^k / k! of a nilpotent class."""
    if a.component(0):
        raise PreconditionError("exp needs a class with zero degree-0 part")
    result = a.ring.one()
    term = a.ring.one()
    for k in range(1, a.ring.dimension + 1):
        term = term * a / k
        if not term:
            break
        result = result + term
    return result


def integrate(a):
    ring = a.ring
    top = ring.top_basis
    return a.coefficient(top) * ring.integral_of_basis(top)


class TruncatedPolynomialRing(ChowRing):
    """Q[H]/(H^{n+1}) with the integral of H^n set to ``fundamental_degree``.

    Basis keys are the exponents 0..n.
    """

    kind = "polynomial-quotient"

    def __init__(self, dimension, fundamental_degree=1, variable="H"):
        self.variable = variable
        super().__init__(
            dimension,
            fundamental_degree,
            generators=((variable, 1),),
            relations=(f"{variable}^{dimension + 1} = 0",),
        )

    @property
    def key(self):
        return ("poly", self.dimension, self.fundamental_degree, self.variable)

    def _basis(self, degree):
        return (degree,)

    def _basis_product(self, a, b):
        return {a + b: 1}

    def degree_of(self, b):
        return b

    def basis_name(self, b):
        if b == 0:
            return "1"
        return self.variable if b == 1 else f"{self.variable}^{b}"

    @property
    def top_basis(self):
        return self.dimension

    def gen(self):
        return self.element(1)


class ProductRing(ChowRing):
    """Tensor product A (x) B with the Kunneth basis of pairs of basis keys."""

    kind = "product"

    def __init__(self, left, right):
        self.left_ring = left
        self.right_ring = right
        gens = tuple((f"{n}_1", d) for n, d in left.generators)
        gens += tuple((f"{n}_2", d) for n, d in right.generators)
        super().__init__(
            left.dimension + right.dimension,
            left.fundamental_degree * right.fundamental_degree,
            generators=gens,
            relations=left.relations + right.relations,
        )

    @property
    def key(self):
        return ("product", self.left_ring.key, self.right_ring.key)

    def _basis(self, degree):
        for i in range(degree + 1):
            for a in self.left_ring.basis(i):
                for b in self.right_ring.basis(degree - i):
                    yield (a, b)

    def _basis_product(self, x, y):
        out = {}
        left = self.left_ring.basis_product(x[0], y[0])
        right = self.right_ring.basis_product(x[1], y[1])
        for a, ca in left.items():
            for b, cb in right.items():
                out[(a, b)] = ca * cb
        return out

    def degree_of(self, b):
        return self.left_ring.degree_of(b[0]) + self.right_ring.degree_of(b[1])

    def basis_name(self, b):
        left = self.left_ring.basis_name(b[0])
        right = self.right_ring.basis_name(b[1])
        if isinstance(self.left_ring, ProductRing):
            left = f"({left})"
        if isinstance(self.right_ring, ProductRing):
            right = f"({right})"
        return "1" if left == right == "1" else f"{left} x {right}"

    @property
    def top_basis(self):
        return (self.left_ring.top_basis, self.right_ring.top_basis)

    def tensor(self, a, b):
        """The class a (x) b for a on the left factor and b on the right factor."""
        if a.ring != self.left_ring or b.ring != self.right_ring:
            raise RingMismatchError("tensor factors do not match the product ring")
        terms = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                terms[(ka, kb)] = ca * cb
        return GradedClass(self, terms)

    def pull_left(self, a):
        return self.tensor(a, self.right_ring.one())

    def pull_right(self, b):
        return self.tensor(self.left_ring.one(), b)


class BundleRing(ChowRing):
    """Chow ring of P(O + L^dual) over a base: base[xi] / (xi^2 - c1(L) xi).

    Basis keys are pairs ``(base_key, e)`` with ``e`` in {0, 1}, standing for
    pi^*(base element) * xi^e.  Pushforward keeps the xi-coefficient.
    """

    kind = "bundle-extension"

    def __init__(self, base, c1L):
        if c1L.ring != base:
            raise RingMismatchError("c1(L) must live on the base ring")
        if not c1L.is_homogeneous(1):
            raise PreconditionError("c1(L) must be homogeneous of degree 1")
        self.base = base
        self.c1L = c1L
        super().__init__(
            base.dimension + 1,
            base.fundamental_degree,
            generators=base.generators + (("xi", 1),),
            relations=base.relations + (f"xi^2 = ({c1L})*xi",),
        )

    @property
    def key(self):
        return ("bundle", self.base.key, tuple(sorted(self.c1L.terms.items())))

    def _basis(self, degree):
        for b in self.base.basis(degree):
            yield (b, 0)
        for b in self.base.basis(degree - 1):
            yield (b, 1)

    def _basis_product(self, x, y):
        ab = GradedClass(self.base, dict(self.base.basis_product(x[0], y[0])))
        e = x[1] + y[1]
        if e == 2:
            ab = ab * self.c1L
            e = 1
        return {(k, e): c for k, c in ab.terms.items()}

    def degree_of(self, b):
        return self.base.degree_of(b[0]) + b[1]

    def basis_name(self, b):
        name = self.base.basis_name(b[0])
        if b[1] == 0:
            return name
        if name == "1":
            return "xi"
        if isinstance(self.base, ProductRing):
            name = f"({name})"
        return f"{name}*xi"

    @property
    def top_basis(self):
        return (self.base.top_basis, 1)

    def pullback(self, a):
        if a.ring != self.base:
            raise RingMismatchError("class does not live on the base ring")
        return GradedClass(self, {(k, 0): c for k, c in a.terms.items()})

    def pushforward(self, y):
        if y.ring != self:
            raise RingMismatchError("class does not live on this bundle ring")
        return GradedClass(self.base, {k: c for (k, e), c in y.terms.items() if e == 1})

    def xi(self):
        return GradedClass(self, {(self.base.basis(0)[0], 1): 1})

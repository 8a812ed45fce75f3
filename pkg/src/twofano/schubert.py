"""Schubert calculus on Grass(k, n).

Partitions live in a ``k x (n - k)`` box (at most k rows, parts at most
n - k).  Multiplication in the Schubert basis goes through the Pieri rule:
the second factor is written as a Jacobi-Trudi determinant in the special
classes sigma_m and each special class is applied by a Pieri step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from twofano.errors import PreconditionError
from twofano.ring import ChowRing


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple
    box_rows: int
    box_cols: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise PreconditionError(f"{parts} is not a partition")
        if len(parts) > self.box_rows or (parts and parts[0] > self.box_cols):
            raise PreconditionError(
                f"{parts} does not fit in a {self.box_rows}x{self.box_cols} box"
            )
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self):
        return sum(self.parts)

    def padded(self):
        return self.parts + (0,) * (self.box_rows - len(self.parts))

    def complement(self):
        padded = self.padded()
        return Partition(
            tuple(self.box_cols - p for p in reversed(padded)), self.box_rows, self.box_cols
        )

    def contains(self, other):
        mine, theirs = self.padded(), other.padded()
        return all(a >= b for a, b in zip(mine, theirs))

    def __str__(self):
        return "s[" + ",".join(map(str, self.parts)) + "]"


def partitions_in_box(rows, cols, weight=None):
    """Partitions in the rows x cols box as tuples, by weight then reverse-lex."""
    if weight is None:
        return [p for w in range(rows * cols + 1) for p in partitions_in_box(rows, cols, w)]

    def fill(budget, rows_left, max_part):
        if budget == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for part in range(min(budget, max_part), 0, -1):
            for rest in fill(budget - part, rows_left - 1, part):
                yield (part,) + rest

    return list(fill(weight, rows, cols))


def pieri_multiply(p, row_class_degree):
    """sigma_p * sigma_m as a dict {Partition: multiplicity}.

    The result runs over partitions mu in the box obtained from p by adding
    a horizontal strip of ``row_class_degree`` boxes.
    """
    m = row_class_degree
    if not 1 <= m <= p.box_cols:
        raise PreconditionError(f"special class degree {m} outside 1..{p.box_cols}")
    lam = p.padded()
    rows = p.box_rows
    out = {}

    def grow(i, prefix, budget):
        if i == rows:
            if budget == 0:
                mu = Partition(tuple(prefix), rows, p.box_cols)
                out[mu] = out.get(mu, 0) + 1
            return
        upper = p.box_cols if i == 0 else lam[i - 1]
        for value in range(lam[i], min(upper, lam[i] + budget) + 1):
            grow(i + 1, prefix + [value], budget - (value - lam[i]))

    grow(0, [], m)
    return out


class SchubertRing(ChowRing):
    """Chow ring of Grass(k, n) with basis keys the partition tuples in the box."""

    kind = "schubert-basis"

    def __init__(self, k, n):
        if not 1 <= k <= n - 1:
            raise PreconditionError(f"need 1 <= k <= n-1, got k={k}, n={n}")
        self.k = k
        self.n = n
        self.rows = k
        self.cols = n - k
        gens = tuple((f"s[{m}]", m) for m in range(1, self.cols + 1))
        super().__init__(k * (n - k), 1, generators=gens, relations=("Pieri rule",))
        self._pieri_cache = {}

    @property
    def key(self):
        return ("schubert", self.k, self.n)

    def _basis(self, degree):
        return partitions_in_box(self.rows, self.cols, degree)

    def degree_of(self, b):
        return sum(b)

    def basis_name(self, b):
        return "1" if not b else "s[" + ",".join(map(str, b)) + "]"

    @property
    def top_basis(self):
        return (self.cols,) * self.rows

    def partition(self, parts):
        return Partition(tuple(parts), self.rows, self.cols)

    def sigma(self, *parts):
        """The Schubert class sigma_parts (zero if it does not fit in the box)."""
        parts = tuple(p for p in parts if p)
        if len(parts) > self.rows or (parts and parts[0] > self.cols):
            return self.zero()
        return self.element(self.partition(parts).parts)

    def _pieri(self, lam, m):
        """Apply the special class sigma_m to the basis key lam."""
        if m == 0:
            return {lam: 1}
        if m < 0 or m > self.cols:
            return {}
        key = (lam, m)
        try:
            return self._pieri_cache[key]
        except KeyError:
            pass
        expansion = {mu.parts: c for mu, c in pieri_multiply(self.partition(lam), m).items()}
        self._pieri_cache[key] = expansion
        return expansion

    def _basis_product(self, a, b):
        # expand the shorter partition by Jacobi-Trudi: s_mu = det(h_{mu_i - i + j})
        lam, mu = (a, b) if len(a) >= len(b) else (b, a)
        length = len(mu)
        out = {}
        for perm in itertools.permutations(range(length)):
            degrees = [mu[i] - i + perm[i] for i in range(length)]
            if any(d < 0 or d > self.cols for d in degrees):
                continue
            sign = _permutation_sign(perm)
            current = {lam: Fraction(sign)}
            for d in degrees:
                nxt = {}
                for nu, c in current.items():
                    for rho, v in self._pieri(nu, d).items():
                        nxt[rho] = nxt.get(rho, 0) + c * v
                current = nxt
                if not current:
                    break
            for nu, c in current.items():
                out[nu] = out.get(nu, 0) + c
        return out


def _permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign

"""Textual space specifications.

Grammar (whitespace separated ``key=value`` pairs)::

    ci n=<int> [w=<int,...>] [d=<int,...>]
    grass k=<int> n=<int>
    product (<spec>) (<spec>)
    bundle base=(<spec>) c1L=<int>

``c1L`` is a multiple of the first Picard generator of the base.  Parsing
returns a node that renders back to a canonical string, builds the
:class:`~twofano.spaces.Space` and evaluates the closed-form 2-Fano
criterion where one exists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from twofano import spaces
from twofano.classify import (
    oracle_bundle_fano,
    oracle_bundle_two_fano,
    oracle_ci_two_fano,
    oracle_grassmannian_two_fano,
)
from twofano.errors import SpecParseError


@dataclass(frozen=True)
class CINode:
    n: int
    weights: tuple = None
    degrees: tuple = ()

    def __str__(self):
        text = f"ci n={self.n}"
        if self.weights is not None:
            text += " w=" + ",".join(map(str, self.weights))
        if self.degrees:
            text += " d=" + ",".join(map(str, self.degrees))
        return text

    def ci_spec(self):
        weights = self.weights if self.weights is not None else (1,) * (self.n + 1)
        return spaces.CompleteIntersectionSpec(weights, self.degrees)

    def build(self, depth=None):
        return spaces.make_complete_intersection(self.ci_spec(), depth)

    def oracle(self):
        return oracle_ci_two_fano(self.ci_spec())


@dataclass(frozen=True)
class GrassNode:
    k: int
    n: int

    def __str__(self):
        return f"grass k={self.k} n={self.n}"

    def build(self, depth=None):
        return spaces.make_grassmannian(spaces.GrassmannianSpec(self.k, self.n), depth)

    def oracle(self):
        return oracle_grassmannian_two_fano(spaces.GrassmannianSpec(self.k, self.n))


@dataclass(frozen=True)
class ProductNode:
    left: object
    right: object

    def __str__(self):
        return f"product ({self.left}) ({self.right})"

    def build(self, depth=None):
        return spaces.make_product(self.left.build(depth), self.right.build(depth))

    def oracle(self):
        a, b = self.left.oracle(), self.right.oracle()
        if a is None or b is None:
            return None
        return a and b


@dataclass(frozen=True)
class BundleNode:
    base: object
    c1L: int

    def __str__(self):
        return f"bundle base=({self.base}) c1L={self.c1L}"

    def _base_and_class(self, depth):
        base = self.base.build(depth)
        return base, base.picard_generators[0] * self.c1L

    def build(self, depth=None):
        base, c1L = self._base_and_class(depth)
        return spaces.make_p1_bundle(spaces.BundleSpec(base, c1L))

    def oracle(self):
        base, c1L = self._base_and_class(2)
        return oracle_bundle_fano(base, c1L) and oracle_bundle_two_fano(base, c1L)


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"-?\d+")
_INT_LIST = re.compile(r"(?:\d+(?:,\d+)*)?")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise SpecParseError(message, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char):
        if self.peek() != char:
            self.error(f"expected '{char}'")
        self.pos += 1

    def name(self):
        self.skip()
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.error("expected a name")
        self.pos = m.end()
        return m.group()

    def integer(self):
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def int_list(self):
        m = _INT_LIST.match(self.text, self.pos)
        self.pos = m.end()
        return tuple(int(x) for x in m.group().split(",")) if m.group() else ()

    def nested(self):
        self.expect("(")
        node = self.spec()
        self.expect(")")
        return node

    def pairs(self, readers):
        """Read key=value pairs until ')' or end; ``readers`` maps key to reader."""
        values = {}
        while self.peek() not in ("", ")"):
            start = self.pos
            key = self.name()
            if key not in readers:
                self.error(f"unknown key '{key}'", start)
            if key in values:
                self.error(f"duplicate key '{key}'", start)
            if self.text[self.pos : self.pos + 1] != "=":
                self.error("expected '=' after key")
            self.pos += 1
            values[key] = (readers[key](), start)
        return values

    def spec(self):
        start = self.pos
        kind = self.name()
        if kind == "ci":
            values = self.pairs({"n": self.integer, "w": self.int_list, "d": self.int_list})
            if "n" not in values:
                self.error("ci needs n=<int>", start)
            n = values["n"][0]
            weights = values["w"][0] if "w" in values else None
            if weights is not None and len(weights) != n + 1:
                self.error(f"w needs {n + 1} weights, got {len(weights)}", values["w"][1])
            degrees = values["d"][0] if "d" in values else ()
            return CINode(n, weights, degrees)
        if kind == "grass":
            values = self.pairs({"k": self.integer, "n": self.integer})
            for key in ("k", "n"):
                if key not in values:
                    self.error(f"grass needs {key}=<int>", start)
            return GrassNode(values["k"][0], values["n"][0])
        if kind == "product":
            return ProductNode(self.nested(), self.nested())
        if kind == "bundle":
            values = self.pairs({"base": self.nested, "c1L": self.integer})
            for key in ("base", "c1L"):
                if key not in values:
                    self.error(f"bundle needs {key}=...", start)
            return BundleNode(values["base"][0], values["c1L"][0])
        self.error(f"unknown space kind '{kind}'", start)


def parse_spec(text):
    parser = _Parser(text)
    node = parser.spec()
    if parser.peek():
        parser.error("unexpected trailing input")
    return node

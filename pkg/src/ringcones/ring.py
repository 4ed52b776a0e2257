"""Finite unital rings given by Cayley tables.

Elements are the integers ``0..order-1``; ``0`` is the additive identity for
every ring built here.  Everything above this module treats elements as
opaque indices and only talks to the ring through :meth:`FiniteRing.add`,
:meth:`FiniteRing.mul` and the ideal helpers.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import InvalidSpec, ParseError, SizeExceeded
from .report import VerificationReport

MAX_ORDER = 256

Table = tuple[tuple[int, ...], ...]


def _freeze(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


@dataclass(frozen=True)
class FiniteRing:
    add_table: Table
    mul_table: Table
    zero: int = 0
    one: int = 0
    label: str = field(default="ring", compare=False)
    names: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.add_table)
        if n < 1:
            raise InvalidSpec("a ring needs at least one element")
        if n > MAX_ORDER:
            raise SizeExceeded(f"ring order {n} exceeds cap {MAX_ORDER}")
        for table in (self.add_table, self.mul_table):
            if len(table) != n or any(len(row) != n for row in table):
                raise InvalidSpec("operation tables must be square and of equal size")
            if any(not 0 <= v < n for row in table for v in row):
                raise InvalidSpec("table entry out of range")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise InvalidSpec("zero/one out of range")
        object.__setattr__(self, "add_table", _freeze(self.add_table))
        object.__setattr__(self, "mul_table", _freeze(self.mul_table))
        if self.names is not None and len(self.names) != n:
            raise InvalidSpec("names must match the ring order")

    @property
    def order(self) -> int:
        return len(self.add_table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    @cached_property
    def _neg(self) -> tuple[int, ...]:
        neg = []
        for a in self.elements:
            row = self.add_table[a]
            neg.append(next((b for b in self.elements if row[b] == self.zero), -1))
        return tuple(neg)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def name(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a)

    @cached_property
    def _left_ideals(self) -> tuple[frozenset[int], ...]:
        m = self.mul_table
        return tuple(frozenset(m[r][a] for r in self.elements) for a in self.elements)

    @cached_property
    def _right_ideals(self) -> tuple[frozenset[int], ...]:
        m = self.mul_table
        return tuple(frozenset(m[a][r] for r in self.elements) for a in self.elements)

    @cached_property
    def _left_generator(self) -> tuple[int, ...]:
        first: dict[frozenset[int], int] = {}
        for a, ideal in enumerate(self._left_ideals):
            first.setdefault(ideal, a)
        return tuple(first[ideal] for ideal in self._left_ideals)

    def left_ideal(self, a: int) -> frozenset[int]:
        return self._left_ideals[a]

    def right_ideal(self, a: int) -> frozenset[int]:
        return self._right_ideals[a]

    def left_generator(self, a: int) -> int:
        """Smallest element generating the same principal left ideal as ``a``."""
        return self._left_generator[a]

    def is_regular_element(self, a: int) -> bool:
        m = self.mul_table
        return any(m[m[a][x]][a] == a for x in self.elements)

    def is_von_neumann_regular(self) -> bool:
        return all(self.is_regular_element(a) for a in self.elements)

    def is_commutative(self) -> bool:
        m = self.mul_table
        return all(m[a][b] == m[b][a] for a in self.elements for b in self.elements)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "zero": self.zero,
            "one": self.one,
            "add_table": [list(r) for r in self.add_table],
            "mul_table": [list(r) for r in self.mul_table],
        }

    @classmethod
    def from_dict(cls, data: dict) -> FiniteRing:
        return cls(data["add_table"], data["mul_table"], data["zero"], data["one"], data.get("label", "ring"))

    def dump_text(self) -> str:
        width = len(str(self.order - 1))
        lines = [f"ring {self.label} order={self.order} zero={self.zero} one={self.one}"]
        for title, table in (("+", self.add_table), ("*", self.mul_table)):
            lines.append(title)
            lines.extend(" ".join(f"{v:>{width}}" for v in row) for row in table)
        return "\n".join(lines)


# -- constructors ---------------------------------------------------------


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise SizeExceeded(f"ring order {n} exceeds cap {MAX_ORDER}")


def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise InvalidSpec(f"zmod modulus must be >= 1, got {n}")
    _check_order(n)
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(add, mul, 0, 1 % n, f"zmod:{n}", tuple(str(a) for a in range(n)))


def product_ring(r: FiniteRing, s: FiniteRing) -> FiniteRing:
    _check_order(r.order * s.order)
    pairs = list(itertools.product(r.elements, s.elements))
    index = {p: i for i, p in enumerate(pairs)}
    add = [[index[(r.add(a, c), s.add(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    mul = [[index[(r.mul(a, c), s.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    names = tuple(f"({r.name(a)},{s.name(b)})" for a, b in pairs)
    return FiniteRing(add, mul, index[(r.zero, s.zero)], index[(r.one, s.one)], f"prod:{r.label},{s.label}", names)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def matrix_ring(k: int, p: int) -> FiniteRing:
    """k x k matrices over Z_p, enumerated row-major lexicographically."""
    if k < 1:
        raise InvalidSpec(f"matrix size must be >= 1, got {k}")
    if not _is_prime(p):
        raise InvalidSpec(f"matrix base zmod:{p} is not a field")
    _check_order(p ** (k * k))
    mats = list(itertools.product(range(p), repeat=k * k))
    index = {m: i for i, m in enumerate(mats)}

    def matmul(x, y):
        return tuple(
            sum(x[i * k + t] * y[t * k + j] for t in range(k)) % p for i in range(k) for j in range(k)
        )

    add = [[index[tuple((u + v) % p for u, v in zip(x, y))] for y in mats] for x in mats]
    mul = [[index[matmul(x, y)] for y in mats] for x in mats]
    ident = tuple(int(i == j) for i in range(k) for j in range(k))
    names = tuple("[" + ";".join(",".join(map(str, m[i * k:(i + 1) * k])) for i in range(k)) + "]" for m in mats)
    return FiniteRing(add, mul, index[mats[0]], index[ident], f"mat:{k}:zmod:{p}", names)


def opposite_ring(r: FiniteRing) -> FiniteRing:
    mul = tuple(zip(*r.mul_table))
    label = r.label[:-3] if r.label.endswith("^op") else r.label + "^op"
    return FiniteRing(r.add_table, mul, r.zero, r.one, label, r.names)


# -- ring-spec grammar ----------------------------------------------------

_INT = re.compile(r"\d+")


def _expect(text: str, pos: int, token: str) -> int:
    if not text.startswith(token, pos):
        raise ParseError(f"expected {token!r} at offset {pos} in {text!r}")
    return pos + len(token)


def _integer(text: str, pos: int) -> tuple[int, int]:
    m = _INT.match(text, pos)
    if not m:
        raise ParseError(f"expected an integer at offset {pos} in {text!r}")
    return int(m.group()), m.end()


def _parse(text: str, pos: int) -> tuple[FiniteRing, int]:
    if text.startswith("zmod:", pos):
        n, pos = _integer(text, pos + 5)
        return zmod(n), pos
    if text.startswith("mat:", pos):
        k, pos = _integer(text, pos + 4)
        pos = _expect(text, pos, ":zmod:")
        p, pos = _integer(text, pos)
        return matrix_ring(k, p), pos
    if text.startswith("prod:", pos):
        left, pos = _parse(text, pos + 5)
        pos = _expect(text, pos, ",")
        right, pos = _parse(text, pos)
        return product_ring(left, right), pos
    raise ParseError(f"unknown ring constructor at offset {pos} in {text!r}")


def parse_ring_spec(text: str) -> FiniteRing:
    """Parse ``zmod:<n>``, ``prod:<spec>,<spec>`` or ``mat:<k>:zmod:<p>``."""
    text = text.strip()
    ring, pos = _parse(text, 0)
    if pos != len(text):
        raise ParseError(f"trailing input at offset {pos} in {text!r}")
    return ring


# -- axioms ---------------------------------------------------------------


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def _associativity_witness(t: np.ndarray):
    n = len(t)
    for x in range(n):
        lhs = t[t[x]]  # lhs[y, z] = (x.y).z
        rhs = t[x][t]  # rhs[y, z] = x.(y.z)
        hit = _first(lhs != rhs)
        if hit:
            return (x, *hit)
    return None


def table_axiom_checks(
    report: VerificationReport,
    add_table,
    mul_table,
    zero: int,
    one: int | None,
    prefix: str = "ring",
) -> None:
    """Append additive group, associativity and distributivity checks to ``report``.

    With ``one=None`` the unit laws are not checked.  Every failure carries
    the first offending tuple in lexicographic order.
    """
    a = np.asarray(add_table, dtype=np.int64)
    m = np.asarray(mul_table, dtype=np.int64)
    n = len(a)
    idx = np.arange(n)

    report.add(f"{prefix}.add.assoc", "addition is associative", _witness(("x", "y", "z"), _associativity_witness(a)))
    report.add(f"{prefix}.add.comm", "addition is commutative", _witness(("x", "y"), _first(a != a.T)))
    report.add(f"{prefix}.add.zero", "zero is an additive identity", _witness(("x",), _first((a[zero] != idx) | (a[:, zero] != idx))))
    report.add(f"{prefix}.add.neg", "every element has an additive inverse", _witness(("x",), _first(~(a == zero).any(axis=1))))
    report.add(f"{prefix}.mul.assoc", "multiplication is associative", _witness(("x", "y", "z"), _associativity_witness(m)))
    if one is not None:
        report.add(f"{prefix}.mul.one", "one is a two-sided multiplicative identity", _witness(("x",), _first((m[one] != idx) | (m[:, one] != idx))))

    left = right = None
    for x in range(n):
        lhs = m[x][a]  # x.(y+z)
        rhs = a[m[x][:, None], m[x][None, :]]
        hit = _first(lhs != rhs)
        if hit and left is None:
            left = (x, *hit)
        col = m[:, x]
        lhs = col[a]  # (y+z).x
        rhs = a[col[:, None], col[None, :]]
        hit = _first(lhs != rhs)
        if hit and right is None:
            right = (x, *hit)
        if left and right:
            break
    report.add(f"{prefix}.distrib.left", "x(y+z) = xy + xz", _witness(("x", "y", "z"), left))
    report.add(f"{prefix}.distrib.right", "(y+z)x = yx + zx", _witness(("x", "y", "z"), right))


def _witness(names, hit):
    return None if hit is None else dict(zip(names, hit))


def verify_ring_axioms(r: FiniteRing) -> VerificationReport:
    report = VerificationReport(f"ring-axioms[{r.label}]")
    table_axiom_checks(report, r.add_table, r.mul_table, r.zero, r.one)
    return report


# -- ideals and Green's relations -----------------------------------------


def principal_left_ideal_set(r: FiniteRing, a: int) -> frozenset[int]:
    return r.left_ideal(a)


def principal_right_ideal_set(r: FiniteRing, a: int) -> frozenset[int]:
    return r.right_ideal(a)


def green_L(r: FiniteRing, a: int, b: int) -> bool:
    return r.left_ideal(a) == r.left_ideal(b)


def green_R(r: FiniteRing, a: int, b: int) -> bool:
    return r.right_ideal(a) == r.right_ideal(b)


def find_isomorphism(r: FiniteRing, s: FiniteRing) -> tuple[int, ...] | None:
    """Backtracking search for a unital ring isomorphism ``r -> s``.

    Returns the image tuple indexed by elements of ``r``.  Each relation
    ``u op v = w`` is checked as soon as the largest of ``u, v, w`` is assigned.
    """
    if r.order != s.order:
        return None
    n = r.order
    fixed = {r.zero: s.zero, r.one: s.one}
    if len(set(fixed.values())) != len(fixed):
        return None
    reserved = set(fixed.values())
    buckets: list[list[tuple[int, int, int, Table]]] = [[] for _ in range(n)]
    for op_r, op_s in ((r.add_table, s.add_table), (r.mul_table, s.mul_table)):
        for u in range(n):
            for v in range(n):
                w = op_r[u][v]
                buckets[max(u, v, w)].append((u, v, w, op_s))
    image = [-1] * n
    used = [False] * n

    def search(x: int) -> bool:
        if x == n:
            return True
        candidates = [fixed[x]] if x in fixed else [c for c in range(n) if c not in reserved]
        for c in candidates:
            if used[c] and x not in fixed:
                continue
            image[x], used[c] = c, True
            if all(image[w] == op_s[image[u]][image[v]] for u, v, w, op_s in buckets[x]) and search(x + 1):
                return True
            image[x], used[c] = -1, False
        return False

    return tuple(image) if search(0) else None

"""Coefficient ring: integer polynomials on Euler symbols of nontrivial characters.

An element is stored sparsely as {monomial: coefficient}.  A monomial maps
Euler symbols to positive exponents and is encoded as a tuple of
(character residues, exponent) pairs sorted by residues; the empty tuple is
the unit monomial.  Every symbol e[gamma] sits in homological degree -2, so
a monomial of exponent sum k has degree -2k.  There is no symbol for the
trivial character: the Euler class of a representation with a trivial
summand is zero outright.
"""

from __future__ import annotations

from .errors import MismatchError, PreconditionError
from .groups import AbelianGroup, Character, Representation, format_residues
from .render import format_power, join_signed, signed_product

Mono = tuple  # ((residues, exponent), ...), sorted by residues

_char_pos_cache: dict[tuple, dict[tuple, int]] = {}


def _char_positions(group: AbelianGroup) -> dict[tuple, int]:
    """Map nontrivial-character residues to a fixed slot, for monomial ordering."""
    pos = _char_pos_cache.get(group.cyclic_orders)
    if pos is None:
        nontrivial = [c.residues for c in group.characters() if not c.is_trivial]
        pos = {rs: i for i, rs in enumerate(nontrivial)}
        _char_pos_cache[group.cyclic_orders] = pos
    return pos


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for rs, k in m2:
        acc[rs] = acc.get(rs, 0) + k
    return tuple(sorted(acc.items()))


def _mono_div(m: Mono, d: Mono) -> Mono | None:
    """Divide monomial m by d, or None when not divisible."""
    acc = dict(m)
    for rs, k in d:
        have = acc.get(rs, 0)
        if have < k:
            return None
        if have == k:
            del acc[rs]
        else:
            acc[rs] = have - k
    return tuple(sorted(acc.items()))


class CoeffPoly:
    """Sparse integer polynomial on Euler symbols of one group's nontrivial characters."""

    __slots__ = ("group", "terms")

    def __init__(self, group: AbelianGroup, terms: dict | None = None):
        self.group = group
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, group: AbelianGroup) -> "CoeffPoly":
        return cls(group, {})

    @classmethod
    def const(cls, group: AbelianGroup, n: int) -> "CoeffPoly":
        return cls(group, {(): int(n)})

    @classmethod
    def one(cls, group: AbelianGroup) -> "CoeffPoly":
        return cls.const(group, 1)

    @classmethod
    def euler(cls, gamma: Character) -> "CoeffPoly":
        """The Euler symbol of a single nontrivial character."""
        if gamma.is_trivial:
            raise PreconditionError("no Euler symbol for the trivial character")
        return cls(gamma.group, {((gamma.residues, 1),): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def _coerce(self, other) -> "CoeffPoly | None":
        if isinstance(other, CoeffPoly):
            if other.group != self.group:
                raise MismatchError("coefficient polynomials over different groups")
            return other
        if isinstance(other, int):
            return CoeffPoly.const(self.group, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in rhs.terms.items():
            acc[m] = acc.get(m, 0) + c
        return CoeffPoly(self.group, acc)

    __radd__ = __add__

    def __neg__(self):
        return CoeffPoly(self.group, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in rhs.terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return CoeffPoly(self.group, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PreconditionError("negative power of a coefficient polynomial")
        out = CoeffPoly.one(self.group)
        base = self
        while n:
            if n & 1:
                out = out * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        return (
            isinstance(other, CoeffPoly)
            and self.group == other.group
            and self.terms == other.terms
        )

    __hash__ = None

    def _mono_key(self, m: Mono):
        """Graded-lex key, ascending; used for division and deterministic rendering."""
        pos = _char_positions(self.group)
        vec = [0] * len(pos)
        total = 0
        for rs, k in m:
            vec[pos[rs]] = k
            total += k
        return (total, tuple(vec))

    def degree(self) -> int | None:
        """Homological degree; None for zero, error when inhomogeneous."""
        if not self.terms:
            return None
        degs = {sum(k for _, k in m) for m in self.terms}
        if len(degs) > 1:
            raise PreconditionError("inhomogeneous coefficient polynomial has no degree")
        return -2 * degs.pop()

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(k for _, k in m) for m in self.terms}) <= 1

    def support(self) -> set[Character]:
        """The set of Euler symbols that occur."""
        return {
            Character(self.group, rs) for m in self.terms for rs, _ in m
        }

    def divexact(self, other: "CoeffPoly") -> "CoeffPoly | None":
        """Exact quotient self / other, or None when it does not exist.

        Leading-term division in graded-lex order; sound for exact quotients
        because the coefficient ring is an integral domain.
        """
        rhs = self._coerce(other)
        if rhs is None or rhs.is_zero:
            raise PreconditionError("division by zero coefficient polynomial")
        if self.is_zero:
            return self
        lt_m = max(rhs.terms, key=self._mono_key)
        lt_c = rhs.terms[lt_m]
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            m = max(rem, key=self._mono_key)
            c = rem[m]
            qm = _mono_div(m, lt_m)
            if qm is None or c % lt_c:
                return None
            qc = c // lt_c
            quot[qm] = qc
            for m2, c2 in rhs.terms.items():
                mm = _mono_mul(qm, m2)
                nc = rem.get(mm, 0) - qc * c2
                if nc:
                    rem[mm] = nc
                else:
                    rem.pop(mm, None)
        return CoeffPoly(self.group, quot)

    def specialize(self, assignment: dict) -> "CoeffPoly":
        """Apply a ring map sending listed Euler symbols to given values.

        Symbols absent from the assignment map to themselves.
        """
        values: dict[tuple, CoeffPoly] = {}
        for ch, val in assignment.items():
            if not isinstance(ch, Character) or ch.group != self.group:
                raise MismatchError(f"assignment key {ch!r} is not a character of {self.group}")
            if ch.is_trivial:
                raise PreconditionError("the trivial character has no Euler symbol")
            v = self._coerce(val)
            if v is None:
                raise PreconditionError(f"assignment value {val!r} is not a coefficient")
            values[ch.residues] = v
        out = CoeffPoly.zero(self.group)
        for m, c in self.terms.items():
            term = CoeffPoly.const(self.group, c)
            for rs, k in m:
                base = values.get(rs)
                if base is None:
                    base = CoeffPoly(self.group, {((rs, k),): 1})
                    term = term * base
                else:
                    term = term * base**k
            out = out + term
        return out

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: self._mono_key(kv[0]), reverse=True)

    def flat_terms(self) -> list:
        return [
            (c, [format_power(f"e[{format_residues(rs)}]", k) for rs, k in m])
            for m, c in self.sorted_terms()
        ]

    def __str__(self):
        return join_signed([signed_product(c, syms) for c, syms in self.flat_terms()])

    def to_json(self) -> list:
        return [
            {
                "coeff": c,
                "exponents": {format_residues(rs): k for rs, k in m},
            }
            for m, c in self.sorted_terms()
        ]

    def __repr__(self):
        return f"CoeffPoly({self.group}, {self})"


def euler_class(rep: Representation) -> CoeffPoly:
    """Euler class of a representation: zero when a trivial summand occurs,
    otherwise the product of the summands' Euler symbols."""
    if rep.contains_trivial:
        return CoeffPoly.zero(rep.group)
    counts: dict[tuple, int] = {}
    for c in rep.summands:
        counts[c.residues] = counts.get(c.residues, 0) + 1
    return CoeffPoly(rep.group, {tuple(sorted(counts.items())): 1})

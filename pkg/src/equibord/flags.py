"""Truncated character flags, the free module on their projective basis,
augmentations, and coaugmentation classes.

A flag of length N lists characters gamma_1..gamma_N with gamma_1 trivial;
its stages are the partial sums V_i = gamma_1 + ... + gamma_i.  The module
R_E carried by the flag has basis beta_0..beta_N over the coefficient ring,
with beta_i in degree 2i.  The augmentation of a character alpha pairs to
e(alpha^{-1} (x) V_i) against the i-th stage class, and the coaugmentation
class of alpha is the dual expansion over the basis, which truncates at the
first occurrence of alpha in the flag.
"""

from __future__ import annotations

from .coeff import CoeffPoly, euler_class
from .errors import MismatchError, PreconditionError, SpecParseError
from .groups import AbelianGroup, Character, Representation, parse_character


class Flag:
    """Truncated flag of characters; the first one must be trivial."""

    __slots__ = ("group", "chars", "_hash")

    def __init__(self, group: AbelianGroup, chars):
        cs = tuple(chars)
        if not cs:
            raise PreconditionError("a flag needs at least one character")
        for c in cs:
            if not isinstance(c, Character) or c.group != group:
                raise MismatchError(f"flag entry {c!r} does not belong to {group}")
        if not cs[0].is_trivial:
            raise PreconditionError("the first flag character must be trivial")
        self.group = group
        self.chars = cs
        self._hash = hash((group.cyclic_orders, tuple(c.residues for c in cs)))

    @classmethod
    def cyclic(cls, group: AbelianGroup, length: int) -> "Flag":
        """Default flag: cycle through all characters in lexicographic order."""
        if length < 1:
            raise PreconditionError("flag length must be at least 1")
        allc = group.characters()
        return cls(group, tuple(allc[i % len(allc)] for i in range(length)))

    @property
    def length(self) -> int:
        return len(self.chars)

    def rep(self, i: int) -> Representation:
        """The i-th stage V_i as a representation; V_0 is zero."""
        if not 0 <= i <= self.length:
            raise PreconditionError(f"stage index {i} out of range 0..{self.length}")
        return Representation(self.group, self.chars[:i])

    def first_index(self, alpha: Character) -> int | None:
        """1-based index of the first occurrence of alpha, or None."""
        for i, c in enumerate(self.chars, start=1):
            if c == alpha:
                return i
        return None

    @property
    def is_complete(self) -> bool:
        """Whether every character of the group occurs in the truncation."""
        return len({c.residues for c in self.chars}) == self.group.order

    def __eq__(self, other):
        return (
            isinstance(other, Flag)
            and self.group == other.group
            and self.chars == other.chars
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        return ",".join(str(c) for c in self.chars)

    def __repr__(self):
        return f"Flag({self.group}, {self})"


def parse_flag(group: AbelianGroup, text: str) -> Flag:
    """Parse a comma-joined character list like "(0),(1),(0),(1)"."""
    s = text.strip()
    if not s:
        raise SpecParseError("empty flag")
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecParseError(f"unbalanced parentheses in flag {text!r}")
        elif ch == "," and depth == 0:
            parts.append(s[start:i])
            start = i + 1
    if depth:
        raise SpecParseError(f"unbalanced parentheses in flag {text!r}")
    parts.append(s[start:])
    return Flag(group, tuple(parse_character(group, p) for p in parts))


class ProjClass:
    """Element of the free module on beta_0..beta_N with CoeffPoly coefficients."""

    __slots__ = ("flag", "coeffs")

    def __init__(self, flag: Flag, coeffs: dict | None = None):
        self.flag = flag
        clean: dict[int, CoeffPoly] = {}
        for i, c in (coeffs or {}).items():
            if not 0 <= i <= flag.length:
                raise PreconditionError(
                    f"basis index {i} out of range 0..{flag.length}"
                )
            if not isinstance(c, CoeffPoly):
                c = CoeffPoly.const(flag.group, c)
            if c.group != flag.group:
                raise MismatchError("coefficient over a different group")
            if not c.is_zero:
                clean[i] = c
        self.coeffs = clean

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> CoeffPoly:
        if not 0 <= i <= self.flag.length:
            raise PreconditionError(f"basis index {i} out of range 0..{self.flag.length}")
        return self.coeffs.get(i, CoeffPoly.zero(self.flag.group))

    def __add__(self, other: "ProjClass") -> "ProjClass":
        if not isinstance(other, ProjClass):
            return NotImplemented
        if self.flag != other.flag:
            raise MismatchError("classes over different flags")
        acc = dict(self.coeffs)
        for i, c in other.coeffs.items():
            acc[i] = acc.get(i, CoeffPoly.zero(self.flag.group)) + c
        return ProjClass(self.flag, acc)

    def __neg__(self):
        return ProjClass(self.flag, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, ProjClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "ProjClass":
        if isinstance(other, (int, CoeffPoly)):
            return ProjClass(self.flag, {i: c * other for i, c in self.coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ProjClass)
            and self.flag == other.flag
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def specialize(self, assignment: dict) -> "ProjClass":
        """Apply a coefficient-ring map to every basis coefficient."""
        return ProjClass(
            self.flag, {i: c.specialize(assignment) for i, c in self.coeffs.items()}
        )

    def degree(self) -> int | None:
        """Homological degree, with beta_i in degree 2i; None for zero."""
        if not self.coeffs:
            return None
        degs = set()
        for i, c in self.coeffs.items():
            d = c.degree()
            if d is None:
                continue
            degs.add(d + 2 * i)
        if len(degs) > 1:
            raise PreconditionError("inhomogeneous class has no degree")
        return degs.pop()

    def __str__(self):
        from .render import join_signed, signed_product

        parts = []
        for i in sorted(self.coeffs):
            for c, esyms in self.coeffs[i].flat_terms():
                parts.append(signed_product(c, esyms + [f"beta[{i}]"]))
        return join_signed(parts)

    def to_json(self) -> list:
        return [
            {"index": i, "coeff": self.coeffs[i].to_json()} for i in sorted(self.coeffs)
        ]

    def __repr__(self):
        return f"ProjClass({self.flag}, {self})"


def aug(flag: Flag, alpha: Character, i: int) -> CoeffPoly:
    """Augmentation value of alpha against the i-th stage class: the Euler
    class of the alpha^{-1}-twisted stage.  The 0-th value is always one."""
    if alpha.group != flag.group:
        raise MismatchError("character of a different group")
    if not 0 <= i <= flag.length:
        raise PreconditionError(f"stage index {i} out of range 0..{flag.length}")
    if i == 0:
        return CoeffPoly.one(flag.group)
    return euler_class(flag.rep(i).tensor(alpha.inverse()))


def coaug(flag: Flag, alpha: Character) -> ProjClass:
    """Coaugmentation class of alpha: beta_0 plus the twisted-stage Euler
    classes on beta_1, beta_2, ..., cut off at the first occurrence of alpha.

    Defined only when alpha occurs in the truncated flag, which is exactly
    when the expansion is finite.
    """
    if alpha.group != flag.group:
        raise MismatchError("character of a different group")
    j = flag.first_index(alpha)
    if j is None:
        raise PreconditionError(
            f"character {alpha} does not occur in the flag truncation"
        )
    group = flag.group
    inv = alpha.inverse().residues
    orders = group.cyclic_orders
    coeffs: dict[int, CoeffPoly] = {0: CoeffPoly.one(group)}
    running: dict[tuple, int] = {}
    for i in range(1, j):
        rs = tuple((a + b) % n for a, b, n in zip(inv, flag.chars[i - 1].residues, orders))
        running[rs] = running.get(rs, 0) + 1
        coeffs[i] = CoeffPoly(group, {tuple(sorted(running.items())): 1})
    return ProjClass(flag, coeffs)


def pairing(flag: Flag, i: int, x: ProjClass) -> CoeffPoly:
    """Pair the i-th stage class against x: picks the beta_i coefficient."""
    if x.flag != flag:
        raise MismatchError("class over a different flag")
    return x.coefficient(i)


def coaug_via_duality(flag: Flag, alpha: Character, augmentation=aug) -> ProjClass:
    """Assemble the coaugmentation class from augmentation values alone,
    coefficient by coefficient through the duality pairing.

    Independent route from coaug; augmentation is injectable so the two
    routes can be driven apart deliberately in sensitivity checks.
    """
    if alpha.group != flag.group:
        raise MismatchError("character of a different group")
    if flag.first_index(alpha) is None:
        raise PreconditionError(
            f"character {alpha} does not occur in the flag truncation"
        )
    coeffs = {i: augmentation(flag, alpha, i) for i in range(flag.length + 1)}
    return ProjClass(flag, coeffs)

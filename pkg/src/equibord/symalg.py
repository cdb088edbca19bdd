"""Shifted symmetric algebras on the flag basis, their localizations at
coaugmentation classes, and the coordinatized degree-zero presentations.

SymPoly realizes the symmetric algebra on the flag module shifted by d:
polynomials in beta_0..beta_N over the coefficient ring, carrying two
gradings.  The variable beta_i has internal homological degree 2i - d
(the [n]-shift convention moves degree deg to deg + n), and the dimension
degree of a monomial is its total exponent; both degrees are additive
under multiplication.

LocFraction inverts coaugmentation classes: all of them in MUP mode, only
the trivial one in mUP mode.  Equality is cross-multiplication equality,
sound because the ambient ring is an integral domain.

BExpr is the same data written in the degree-zero generators b_i (shift
-2 family) or c_i (shift +2 family), with b_0 = 1 and each inverted class
expanding as 1 + sum_{i>=1} aug(alpha, i) * b_i.
"""

from __future__ import annotations

from functools import lru_cache

from .coeff import CoeffPoly
from .errors import MismatchError, PreconditionError
from .flags import Flag, ProjClass, aug, coaug
from .groups import Character, format_residues
from .render import format_power, join_signed, signed_product

SHIFTS = (-2, 0, 2)
MODES = ("MUP", "mUP")

BetaMono = tuple  # ((index, exponent), ...) sorted by index


def _bmono_mul(m1: BetaMono, m2: BetaMono) -> BetaMono:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for i, k in m2:
        acc[i] = acc.get(i, 0) + k
    return tuple(sorted(acc.items()))


def _bmono_div(m: BetaMono, d: BetaMono) -> BetaMono | None:
    acc = dict(m)
    for i, k in d:
        have = acc.get(i, 0)
        if have < k:
            return None
        if have == k:
            del acc[i]
        else:
            acc[i] = have - k
    return tuple(sorted(acc.items()))


def _bmono_dim(m: BetaMono) -> int:
    return sum(k for _, k in m)


class SymPoly:
    """Element of the shifted symmetric algebra over one flag."""

    __slots__ = ("flag", "shift", "terms")

    def __init__(self, flag: Flag, shift: int, terms: dict | None = None):
        if shift not in SHIFTS:
            raise PreconditionError(f"shift must be one of {SHIFTS}, got {shift}")
        clean: dict[BetaMono, CoeffPoly] = {}
        for m, c in (terms or {}).items():
            for i, k in m:
                if not 0 <= i <= flag.length:
                    raise PreconditionError(
                        f"beta index {i} out of range 0..{flag.length}"
                    )
                if k < 1:
                    raise PreconditionError(f"nonpositive exponent on beta[{i}]")
            if not isinstance(c, CoeffPoly):
                c = CoeffPoly.const(flag.group, c)
            elif c.group != flag.group:
                raise MismatchError("coefficient over a different group")
            if not c.is_zero:
                clean[m] = c
        self.flag = flag
        self.shift = shift
        self.terms = clean

    @classmethod
    def zero(cls, flag: Flag, shift: int) -> "SymPoly":
        return cls(flag, shift, {})

    @classmethod
    def const(cls, flag: Flag, shift: int, c) -> "SymPoly":
        return cls(flag, shift, {(): c})

    @classmethod
    def one(cls, flag: Flag, shift: int) -> "SymPoly":
        return cls.const(flag, shift, 1)

    @classmethod
    def var(cls, flag: Flag, shift: int, i: int, k: int = 1) -> "SymPoly":
        return cls(flag, shift, {((i, k),): CoeffPoly.one(flag.group)})

    @classmethod
    def from_proj(cls, x: ProjClass, shift: int) -> "SymPoly":
        """Embed a flag-module class as a dimension-degree-1 element."""
        return cls(x.flag, shift, {((i, 1),): c for i, c in x.coeffs.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((), CoeffPoly.zero(self.flag.group)).is_one

    def _coerce(self, other) -> "SymPoly | None":
        if isinstance(other, SymPoly):
            if other.flag != self.flag:
                raise MismatchError("operands over different flags")
            if other.shift != self.shift:
                raise MismatchError("operands over different shifts")
            return other
        if isinstance(other, (int, CoeffPoly)):
            return SymPoly.const(self.flag, self.shift, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self.terms)
        zero = CoeffPoly.zero(self.flag.group)
        for m, c in rhs.terms.items():
            acc[m] = acc.get(m, zero) + c
        return SymPoly(self.flag, self.shift, acc)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.flag, self.shift, {m: -c for m, c in self.terms.items()})

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
        zero = CoeffPoly.zero(self.flag.group)
        for m1, c1 in self.terms.items():
            for m2, c2 in rhs.terms.items():
                m = _bmono_mul(m1, m2)
                acc[m] = acc.get(m, zero) + c1 * c2
        return SymPoly(self.flag, self.shift, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PreconditionError("negative power of a polynomial")
        out = SymPoly.one(self.flag, self.shift)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            other = SymPoly.const(self.flag, self.shift, other)
        return (
            isinstance(other, SymPoly)
            and self.flag == other.flag
            and self.shift == other.shift
            and self.terms == other.terms
        )

    __hash__ = None

    def dimension_degree(self) -> int | None:
        """Total beta-exponent; None for zero, error when mixed."""
        if not self.terms:
            return None
        dims = {_bmono_dim(m) for m in self.terms}
        if len(dims) > 1:
            raise PreconditionError("mixed dimension degrees")
        return dims.pop()

    @property
    def is_dim_homogeneous(self) -> bool:
        return len({_bmono_dim(m) for m in self.terms}) <= 1

    def internal_degree(self) -> int | None:
        """Homological degree with beta_i in degree 2i - d; None for zero."""
        if not self.terms:
            return None
        degs = set()
        for m, c in self.terms.items():
            base = sum(k * (2 * i - self.shift) for i, k in m)
            for cm in c.terms:
                degs.add(base - 2 * sum(k for _, k in cm))
        if len(degs) > 1:
            raise PreconditionError("mixed internal degrees")
        return degs.pop()

    def _mono_key(self, m: BetaMono):
        vec = [0] * (self.flag.length + 1)
        tot = 0
        for i, k in m:
            vec[i] = k
            tot += k
        return (tot, tuple(vec))

    def divexact(self, other: "SymPoly") -> "SymPoly | None":
        """Exact quotient self / other, or None when it does not exist."""
        rhs = self._coerce(other)
        if rhs is None or rhs.is_zero:
            raise PreconditionError("division by zero polynomial")
        if self.is_zero:
            return self
        lt_m = max(rhs.terms, key=self._mono_key)
        lt_c = rhs.terms[lt_m]
        rem = dict(self.terms)
        quot: dict = {}
        zero = CoeffPoly.zero(self.flag.group)
        while rem:
            m = max(rem, key=self._mono_key)
            qm = _bmono_div(m, lt_m)
            if qm is None:
                return None
            qc = rem[m].divexact(lt_c)
            if qc is None:
                return None
            quot[qm] = qc
            for m2, c2 in rhs.terms.items():
                mm = _bmono_mul(qm, m2)
                nc = rem.get(mm, zero) - qc * c2
                if nc.is_zero:
                    rem.pop(mm, None)
                else:
                    rem[mm] = nc
        return SymPoly(self.flag, self.shift, quot)

    def specialize(self, assignment: dict) -> "SymPoly":
        """Apply a coefficient-ring map to every term's coefficient."""
        return SymPoly(
            self.flag,
            self.shift,
            {m: c.specialize(assignment) for m, c in self.terms.items()},
        )

    def flat_terms(self) -> list:
        out = []
        for m, c in sorted(self.terms.items(), key=lambda kv: self._mono_key(kv[0]), reverse=True):
            bsyms = [format_power(f"beta[{i}]", k) for i, k in m]
            for ci, esyms in c.flat_terms():
                out.append(signed_product(ci, esyms + bsyms))
        return out

    def __str__(self):
        return join_signed(self.flat_terms())

    def to_json(self) -> list:
        out = []
        for m, c in sorted(self.terms.items(), key=lambda kv: self._mono_key(kv[0]), reverse=True):
            for cm, ci in c.sorted_terms():
                out.append(
                    {
                        "coeff": ci,
                        "euler": {format_residues(rs): k for rs, k in cm},
                        "beta": {str(i): k for i, k in m},
                    }
                )
        return out

    def __repr__(self):
        return f"SymPoly({self.flag}, d={self.shift}, {self})"


def sym_mul(a: SymPoly, b: SymPoly) -> SymPoly:
    """Polynomial product; both gradings are additive."""
    return a * b


@lru_cache(maxsize=None)
def theta_sym(flag: Flag, shift: int, alpha: Character) -> SymPoly:
    """The coaugmentation class of alpha embedded as a dimension-degree-1 element."""
    return SymPoly.from_proj(coaug(flag, alpha), shift)


def theta_mul(flag: Flag, alpha: Character, x):
    """Multiply by the embedded coaugmentation class of alpha.

    Raises the dimension degree by 1 and the internal degree by -d.
    Accepts a SymPoly or a LocFraction.
    """
    if isinstance(x, LocFraction):
        return LocFraction(theta_mul(flag, alpha, x.num), x.denom, x.mode)
    if not isinstance(x, SymPoly) or x.flag != flag:
        raise MismatchError("operand does not live over the given flag")
    return theta_sym(flag, x.shift, alpha) * x


def retract(x: SymPoly, n: int | None = None, alpha: Character | None = None) -> SymPoly:
    """Linear retraction splitting multiplication by the trivial class:
    drop one beta_0 factor per monomial, kill monomials without beta_0.

    The input must be dimension-homogeneous (of dimension n+1 when a target
    dimension n is supplied).  The retraction exists along the trivial
    character only; a request for nontrivial alpha is reported, never
    reinterpreted.
    """
    if alpha is not None and not alpha.is_trivial:
        raise PreconditionError(
            "the retraction is defined along the trivial character only"
        )
    dim = x.dimension_degree()  # raises when mixed
    if n is not None and dim is not None and dim != n + 1:
        raise PreconditionError(f"expected dimension degree {n + 1}, got {dim}")
    acc = {}
    for m, c in x.terms.items():
        d = dict(m)
        k0 = d.pop(0, 0)
        if not k0:
            continue
        if k0 > 1:
            d[0] = k0 - 1
        acc[tuple(sorted(d.items()))] = c
    return SymPoly(x.flag, x.shift, acc)


class LocFraction:
    """num / prod theta_alpha^{f_alpha} in the localized symmetric algebra.

    MUP mode may invert any coaugmentation class whose character occurs in
    the flag truncation; mUP mode only the trivial one.
    """

    __slots__ = ("num", "denom", "mode")

    def __init__(self, num: SymPoly, denom: dict | None = None, mode: str = "MUP"):
        if mode not in MODES:
            raise PreconditionError(f"mode must be one of {MODES}, got {mode!r}")
        clean: dict[Character, int] = {}
        for al, k in (denom or {}).items():
            if not isinstance(al, Character) or al.group != num.flag.group:
                raise MismatchError("denominator character over a different group")
            k = int(k)
            if k < 0:
                raise PreconditionError("negative denominator exponent")
            if not k:
                continue
            if mode == "mUP" and not al.is_trivial:
                raise PreconditionError(
                    "mUP mode only inverts the trivial coaugmentation class"
                )
            if num.flag.first_index(al) is None:
                raise PreconditionError(
                    f"character {al} does not occur in the flag truncation; "
                    "its coaugmentation class is not available"
                )
            clean[al] = k
        self.num = num
        self.denom = clean
        self.mode = mode

    @classmethod
    def from_sym(cls, num: SymPoly, mode: str = "MUP") -> "LocFraction":
        return cls(num, {}, mode)

    @property
    def flag(self) -> Flag:
        return self.num.flag

    @property
    def shift(self) -> int:
        return self.num.shift

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _ctx(self, other: "LocFraction"):
        if self.num.flag != other.num.flag:
            raise MismatchError("fractions over different flags")
        if self.num.shift != other.num.shift:
            raise MismatchError("fractions over different shifts")
        if self.mode != other.mode:
            raise MismatchError("fractions in different localization modes")

    def denominator_poly(self) -> SymPoly:
        out = SymPoly.one(self.num.flag, self.num.shift)
        for al, k in self.denom.items():
            out = out * theta_sym(self.num.flag, self.num.shift, al) ** k
        return out

    def __mul__(self, other):
        if isinstance(other, LocFraction):
            self._ctx(other)
            denom = dict(self.denom)
            for al, k in other.denom.items():
                denom[al] = denom.get(al, 0) + k
            return LocFraction(self.num * other.num, denom, self.mode)
        rhs = self.num._coerce(other)
        if rhs is None:
            return NotImplemented
        return LocFraction(self.num * rhs, self.denom, self.mode)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, LocFraction):
            rhs = self.num._coerce(other)
            if rhs is None:
                return NotImplemented
            other = LocFraction(rhs, {}, self.mode)
        self._ctx(other)
        flag, shift = self.num.flag, self.num.shift
        keys = set(self.denom) | set(other.denom)
        common = {al: max(self.denom.get(al, 0), other.denom.get(al, 0)) for al in keys}

        def lift(frac):
            num = frac.num
            for al, k in common.items():
                need = k - frac.denom.get(al, 0)
                if need:
                    num = num * theta_sym(flag, shift, al) ** need
            return num

        return LocFraction(lift(self) + lift(other), common, self.mode)

    __radd__ = __add__

    def __neg__(self):
        return LocFraction(-self.num, self.denom, self.mode)

    def __sub__(self, other):
        if isinstance(other, LocFraction):
            return self + (-other)
        rhs = self.num._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + LocFraction(-rhs, {}, self.mode)

    def __pow__(self, n: int):
        if n < 0:
            raise PreconditionError("negative power of a fraction")
        return LocFraction(
            self.num**n, {al: k * n for al, k in self.denom.items()}, self.mode
        )

    def __eq__(self, other):
        if not isinstance(other, LocFraction):
            return NotImplemented
        return frac_eq(self, other)

    __hash__ = None

    def specialize(self, assignment: dict) -> "LocFraction":
        """Specialize the numerator's coefficients; the denominator stays symbolic."""
        return LocFraction(self.num.specialize(assignment), self.denom, self.mode)

    def denominator_string(self) -> str:
        dens = [
            format_power(f"theta[{al}]", self.denom[al])
            for al in sorted(self.denom, key=lambda a: a.residues)
        ]
        if not dens:
            return ""
        body = " * ".join(dens)
        return f"({body})" if len(dens) > 1 else body

    def __str__(self):
        num_terms = self.num.flat_terms()
        num = join_signed(num_terms)
        den = self.denominator_string()
        if not den or self.num.is_zero:
            return num
        if len(num_terms) > 1:
            num = f"({num})"
        return f"{num} / {den}"

    def to_json(self) -> dict:
        return {
            "numerator": self.num.to_json(),
            "denominator": [
                {"alpha": str(al), "power": self.denom[al]}
                for al in sorted(self.denom, key=lambda a: a.residues)
            ],
            "mode": self.mode,
            "shift": self.num.shift,
        }

    def __repr__(self):
        return f"LocFraction({self.mode}, {self})"


def frac_eq(a: LocFraction, b: LocFraction) -> bool:
    """Cross-multiplication equality in the localization."""
    a._ctx(b)
    flag, shift = a.num.flag, a.num.shift
    lift_a = SymPoly.one(flag, shift)
    lift_b = SymPoly.one(flag, shift)
    for al in set(a.denom) | set(b.denom):
        diff = b.denom.get(al, 0) - a.denom.get(al, 0)
        if diff > 0:
            lift_a = lift_a * theta_sym(flag, shift, al) ** diff
        elif diff < 0:
            lift_b = lift_b * theta_sym(flag, shift, al) ** (-diff)
    return a.num * lift_a == b.num * lift_b


def frac_reduce(a: LocFraction) -> LocFraction:
    """Greedily divide coaugmentation classes out of the numerator.

    Characters are processed in lexicographic order; the result is
    frac_eq-equal to the input with minimal denominator exponents under
    this rule.
    """
    num = a.num
    denom = dict(a.denom)
    for al in sorted(denom, key=lambda c: c.residues):
        t = theta_sym(a.num.flag, a.num.shift, al)
        while denom.get(al, 0):
            q = num.divexact(t)
            if q is None:
                break
            num = q
            denom[al] -= 1
            if not denom[al]:
                del denom[al]
    return LocFraction(num, denom, a.mode)


def dim_degree(a: LocFraction) -> int | None:
    """Dimension degree dim(num) - sum f_alpha; None for the zero fraction."""
    d = a.num.dimension_degree()
    if d is None:
        return None
    return d - sum(a.denom.values())


class BExpr:
    """Fraction in the degree-zero generators: numerator a polynomial in
    b_i (family "b", shift -2) or c_i (family "c", shift +2) over the
    coefficient ring, denominator a product of inverted classes over
    nontrivial characters.  The trivial inverted class is the unit and is
    never stored."""

    __slots__ = ("flag", "family", "terms", "denom")

    def __init__(self, flag: Flag, family: str, terms: dict | None = None, denom: dict | None = None):
        if family not in ("b", "c"):
            raise PreconditionError(f"generator family must be 'b' or 'c', got {family!r}")
        clean: dict[BetaMono, CoeffPoly] = {}
        for m, c in (terms or {}).items():
            for i, k in m:
                if not 1 <= i <= flag.length:
                    raise PreconditionError(
                        f"generator index {i} out of range 1..{flag.length}"
                    )
                if k < 1:
                    raise PreconditionError("nonpositive generator exponent")
            if not isinstance(c, CoeffPoly):
                c = CoeffPoly.const(flag.group, c)
            elif c.group != flag.group:
                raise MismatchError("coefficient over a different group")
            if not c.is_zero:
                clean[m] = c
        dclean: dict[Character, int] = {}
        for al, k in (denom or {}).items():
            if not isinstance(al, Character) or al.group != flag.group:
                raise MismatchError("denominator character over a different group")
            k = int(k)
            if k < 0:
                raise PreconditionError("negative denominator exponent")
            if not k or al.is_trivial:
                continue
            if flag.first_index(al) is None:
                raise PreconditionError(
                    f"character {al} does not occur in the flag truncation; "
                    "its inverted class is not available"
                )
            dclean[al] = k
        self.flag = flag
        self.family = family
        self.terms = clean
        self.denom = dclean

    @property
    def shift(self) -> int:
        return -2 if self.family == "b" else 2

    @classmethod
    def zero(cls, flag: Flag, family: str) -> "BExpr":
        return cls(flag, family, {}, {})

    @classmethod
    def const(cls, flag: Flag, family: str, c) -> "BExpr":
        return cls(flag, family, {(): c}, {})

    @classmethod
    def one(cls, flag: Flag, family: str) -> "BExpr":
        return cls.const(flag, family, 1)

    @classmethod
    def generator(cls, flag: Flag, family: str, i: int, k: int = 1) -> "BExpr":
        return cls(flag, family, {((i, k),): CoeffPoly.one(flag.group)}, {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _ctx(self, other: "BExpr"):
        if self.flag != other.flag:
            raise MismatchError("operands over different flags")
        if self.family != other.family:
            raise MismatchError("operands over different generator families")

    def _poly_terms_mul(self, t1: dict, t2: dict) -> dict:
        acc: dict = {}
        zero = CoeffPoly.zero(self.flag.group)
        for m1, c1 in t1.items():
            for m2, c2 in t2.items():
                m = _bmono_mul(m1, m2)
                acc[m] = acc.get(m, zero) + c1 * c2
        return acc

    def __mul__(self, other):
        if isinstance(other, BExpr):
            self._ctx(other)
            denom = dict(self.denom)
            for al, k in other.denom.items():
                denom[al] = denom.get(al, 0) + k
            return BExpr(self.flag, self.family, self._poly_terms_mul(self.terms, other.terms), denom)
        if isinstance(other, (int, CoeffPoly)):
            other = BExpr.const(self.flag, self.family, other)
            return self * other
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return BExpr(self.flag, self.family, {m: -c for m, c in self.terms.items()}, self.denom)

    def __add__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            other = BExpr.const(self.flag, self.family, other)
        if not isinstance(other, BExpr):
            return NotImplemented
        self._ctx(other)
        keys = set(self.denom) | set(other.denom)
        common = {al: max(self.denom.get(al, 0), other.denom.get(al, 0)) for al in keys}

        def lift(e: BExpr) -> dict:
            terms = e.terms
            for al, k in common.items():
                need = k - e.denom.get(al, 0)
                for _ in range(need):
                    terms = self._poly_terms_mul(
                        terms, btheta_expansion(self.flag, self.family, al).terms
                    )
            return terms

        zero = CoeffPoly.zero(self.flag.group)
        acc = dict(lift(self))
        for m, c in lift(other).items():
            acc[m] = acc.get(m, zero) + c
        return BExpr(self.flag, self.family, acc, common)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            other = BExpr.const(self.flag, self.family, other)
        if not isinstance(other, BExpr):
            return NotImplemented
        return self + (-other)

    def __pow__(self, n: int):
        if n < 0:
            raise PreconditionError("negative power of a generator expression")
        out = BExpr.one(self.flag, self.family)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        """Structural equality of the stored form (same terms, same denominator)."""
        return (
            isinstance(other, BExpr)
            and self.flag == other.flag
            and self.family == other.family
            and self.terms == other.terms
            and self.denom == other.denom
        )

    __hash__ = None

    def specialize(self, assignment: dict) -> "BExpr":
        return BExpr(
            self.flag,
            self.family,
            {m: c.specialize(assignment) for m, c in self.terms.items()},
            self.denom,
        )

    def _mono_key(self, m: BetaMono):
        vec = [0] * (self.flag.length + 1)
        tot = 0
        for i, k in m:
            vec[i] = k
            tot += k
        return (tot, tuple(vec))

    def flat_terms(self) -> list:
        out = []
        for m, c in sorted(self.terms.items(), key=lambda kv: self._mono_key(kv[0]), reverse=True):
            gsyms = [format_power(f"{self.family}[{i}]", k) for i, k in m]
            for ci, esyms in c.flat_terms():
                out.append(signed_product(ci, esyms + gsyms))
        return out

    def denominator_string(self) -> str:
        dens = [
            format_power(f"{self.family}theta[{al}]", self.denom[al])
            for al in sorted(self.denom, key=lambda a: a.residues)
        ]
        if not dens:
            return ""
        body = " * ".join(dens)
        return f"({body})" if len(dens) > 1 else body

    def __str__(self):
        num_terms = self.flat_terms()
        num = join_signed(num_terms)
        den = self.denominator_string()
        if not den or self.is_zero:
            return num
        if len(num_terms) > 1:
            num = f"({num})"
        return f"{num} / {den}"

    def to_json(self) -> dict:
        terms = []
        for m, c in sorted(self.terms.items(), key=lambda kv: self._mono_key(kv[0]), reverse=True):
            for cm, ci in c.sorted_terms():
                terms.append(
                    {
                        "coeff": ci,
                        "euler": {format_residues(rs): k for rs, k in cm},
                        "generators": {str(i): k for i, k in m},
                    }
                )
        return {
            "family": self.family,
            "numerator": terms,
            "denominator": [
                {"alpha": str(al), "power": self.denom[al]}
                for al in sorted(self.denom, key=lambda a: a.residues)
            ],
        }

    def __repr__(self):
        return f"BExpr({self.family}, {self})"


@lru_cache(maxsize=None)
def btheta_expansion(flag: Flag, family: str, alpha: Character) -> BExpr:
    """The inverted class in generator coordinates: 1 + sum aug(alpha, i) * b_i.

    For the trivial character this is the unit, since every twisted stage
    contains a trivial summand.
    """
    if flag.first_index(alpha) is None:
        raise PreconditionError(
            f"character {alpha} does not occur in the flag truncation"
        )
    terms: dict = {(): CoeffPoly.one(flag.group)}
    for i in range(1, flag.length + 1):
        c = aug(flag, alpha, i)
        if not c.is_zero:
            terms[((i, 1),)] = c
    return BExpr(flag, family, terms, {})


def _to_generators(a: LocFraction, family: str) -> BExpr:
    if a.num.is_zero:
        return BExpr.zero(a.num.flag, family)
    d = dim_degree(a)
    if d != 0:
        raise PreconditionError(
            f"only dimension-degree-0 fractions rewrite to generators, got {d}"
        )
    terms: dict = {}
    for m, c in a.num.terms.items():
        md = dict(m)
        md.pop(0, None)
        key = tuple(sorted(md.items()))
        assert key not in terms  # distinct monomials of one dimension stay distinct
        terms[key] = c
    denom = {al: k for al, k in a.denom.items() if not al.is_trivial}
    return BExpr(a.num.flag, family, terms, denom)


def to_b_generators(a: LocFraction) -> BExpr:
    """Rewrite a dimension-0 fraction in the b-generators (shift -2 ring).

    Each numerator monomial has dimension equal to the total denominator
    exponent, so beta_0 factors drop out term by term and beta_i becomes
    b_i; the denominator keeps one inverted class per nontrivial character.
    """
    if a.num.shift != -2:
        raise PreconditionError("b-generators live in the shift -2 ring")
    return _to_generators(a, "b")


def to_c_generators(a: LocFraction) -> BExpr:
    """Rewrite a dimension-0 fraction in the c-generators (shift +2 ring)."""
    if a.num.shift != 2:
        raise PreconditionError("c-generators live in the shift +2 ring")
    return _to_generators(a, "c")


def expand_b(e: BExpr, mode: str = "MUP") -> LocFraction:
    """Substitute b_i -> beta_i/theta_eps and the inverted classes
    -> theta_alpha/theta_eps, cleared to a single fraction.

    The result has dimension degree 0 (or is zero).
    """
    flag = e.flag
    shift = e.shift
    if e.is_zero:
        return LocFraction(SymPoly.zero(flag, shift), {}, mode)
    F = sum(e.denom.values())
    D = max(_bmono_dim(m) for m in e.terms)
    K = max(D, F)
    terms: dict = {}
    for m, c in e.terms.items():
        pad = K - _bmono_dim(m)
        md = dict(m)
        if pad:
            md[0] = pad
        terms[tuple(sorted(md.items()))] = c
    denom: dict = dict(e.denom)
    if K - F:
        denom[flag.group.identity] = K - F
    return LocFraction(SymPoly(flag, shift, terms), denom, mode)


def mup_normal_form(a: LocFraction) -> BExpr:
    """Denominator-free polynomial in the c-generators for a dimension-0
    mUP fraction; unique because the c_i are polynomial generators."""
    if a.mode != "mUP":
        raise PreconditionError("normal form applies to mUP-mode fractions")
    if a.num.shift != 2:
        raise PreconditionError("the connective periodic ring has shift +2")
    out = _to_generators(a, "c")
    assert not out.denom  # mUP only ever inverts the trivial class
    return out


def presentation(theory: str, flag: Flag, shift: int | None = None, assignment: dict | None = None) -> dict:
    """Generators and inverted classes of one of the four theories over a flag.

    MUP/mUP present the localized symmetric algebras on beta_0..beta_N;
    MU/mU present their degree-zero subrings on the b- or c-generators.
    Theories inverting every coaugmentation class need a complete flag.
    A specializing assignment, when given, is applied to the printed
    expansions of the inverted classes.
    """
    group = flag.group
    family = None

    def _shown(obj):
        return str(obj.specialize(assignment)) if assignment else str(obj)
    if theory in ("MUP", "MU"):
        d = -2 if shift is None else shift
        if d not in (-2, 2):
            raise PreconditionError("presentations use shift -2 or +2")
        missing = [c for c in group.characters() if flag.first_index(c) is None]
        if missing:
            raise PreconditionError(
                f"flag truncation is missing character {missing[0]}; every "
                "coaugmentation class must be invertible for this theory"
            )
    if theory == "MUP":
        gens = [
            {"symbol": f"beta[{i}]", "degree": 2 * i - d}
            for i in range(flag.length + 1)
        ]
        inverted = [
            {
                "symbol": f"theta[{al}]",
                "degree": -d,
                "expansion": _shown(SymPoly.from_proj(coaug(flag, al), d)),
            }
            for al in group.characters()
        ]
    elif theory == "mUP":
        d = 2 if shift is None else shift
        if d != 2:
            raise PreconditionError("the connective periodic presentation has shift +2")
        gens = [
            {"symbol": f"beta[{i}]", "degree": 2 * i - d}
            for i in range(flag.length + 1)
        ]
        inverted = [
            {
                "symbol": f"theta[{group.identity}]",
                "degree": -d,
                "expansion": _shown(SymPoly.from_proj(coaug(flag, group.identity), d)),
            }
        ]
    elif theory == "MU":
        family = "b" if d == -2 else "c"
        gens = [
            {"symbol": f"{family}[{i}]", "degree": 2 * i}
            for i in range(1, flag.length + 1)
        ]
        inverted = [
            {
                "symbol": f"{family}theta[{al}]",
                "degree": 0,
                "expansion": _shown(btheta_expansion(flag, family, al)),
            }
            for al in group.characters()
            if not al.is_trivial
        ]
    elif theory == "mU":
        d = 2 if shift is None else shift
        if d != 2:
            raise PreconditionError("the connective presentation has shift +2")
        family = "c"
        gens = [
            {"symbol": f"c[{i}]", "degree": 2 * i}
            for i in range(1, flag.length + 1)
        ]
        inverted = []
    else:
        raise PreconditionError(f"unknown theory {theory!r}")
    return {
        "theory": theory,
        "group": str(group),
        "flag": [str(c) for c in flag.chars],
        "degree_convention": "homological",
        "shift": d,
        "family": family,
        "generators": gens,
        "inverted": inverted,
    }

"""Brute-force oracles and property sweeps over the algebra layers.

Each check runs an exhaustive or seeded-random sweep of one identity and
returns a CheckResult; run_suite aggregates them.  Reports are fully
deterministic for a fixed SweepConfig (wall-clock millis aside), and every
failure carries a counterexample whose argv member replays the failing
comparison through the command line.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field, fields

from .coeff import CoeffPoly, euler_class
from .errors import PreconditionError, SpecParseError
from .flags import Flag, ProjClass, aug, coaug, coaug_via_duality
from .groups import parse_group
from .symalg import (
    BExpr,
    LocFraction,
    SymPoly,
    btheta_expansion,
    expand_b,
    frac_eq,
    presentation,
    retract,
    theta_mul,
    theta_sym,
    to_b_generators,
    to_c_generators,
)

DEFAULT_GROUPS = (
    "1",
    "Z2",
    "Z3",
    "Z4",
    "Z2xZ2",
    "Z5",
    "Z6",
    "Z2xZ3",
    "Z7",
    "Z8",
    "Z2xZ4",
    "Z2xZ2xZ2",
)


@dataclass(frozen=True)
class SweepConfig:
    groups: tuple = DEFAULT_GROUPS
    max_flag_len: int = 6
    max_dimension: int = 4
    max_index: int = 5
    random_cases: int = 50
    rng_seed: int = 271828

    def __post_init__(self):
        for f in fields(self):
            if f.name in ("groups", "rng_seed"):
                continue
            if getattr(self, f.name) < 1:
                raise SpecParseError(f"{f.name} must be at least 1")
        if not self.groups:
            raise SpecParseError("groups must be nonempty")

    def to_json(self) -> dict:
        return {
            "groups": list(self.groups),
            "max_flag_len": self.max_flag_len,
            "max_dimension": self.max_dimension,
            "max_index": self.max_index,
            "random_cases": self.random_cases,
            "rng_seed": self.rng_seed,
        }


@dataclass
class CheckResult:
    check: str
    status: str
    cases: int
    millis: int
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "status": self.status,
            "cases": self.cases,
            "millis": self.millis,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class Report:
    status: str
    config: SweepConfig
    checks: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "config": self.config.to_json(),
            "checks": [c.to_json() for c in self.checks],
        }


def _finish(name: str, t0: float, cases: int, cx: dict | None) -> CheckResult:
    millis = int((time.perf_counter() - t0) * 1000)
    return CheckResult(name, "fail" if cx else "pass", cases, millis, cx)


def _eval_argv(gspec: str, flag: Flag, expr: str, shift: int | None = None, theory: str | None = None) -> list:
    argv = ["eval", "--group", gspec, "--flag", str(flag)]
    if shift is not None:
        argv += ["--shift", str(shift)]
    if theory is not None:
        argv += ["--theory", theory]
    argv += ["--expr", expr]
    return argv


def _complete_flags(group, max_len: int):
    """All flags of length <= max_len whose truncation contains every character."""
    chars = group.characters()
    for length in range(1, max_len + 1):
        for tail in itertools.product(chars, repeat=length - 1):
            flag_chars = (chars[0],) + tail
            if len({c.residues for c in flag_chars}) == group.order:
                yield Flag(group, flag_chars)


def _duality_sweep(groups, max_flag_len: int, augmentation=aug):
    """Compare the closed coaugmentation formula against the duality route."""
    cases = 0
    for gspec in groups:
        group = parse_group(gspec)
        for flag in _complete_flags(group, max_flag_len):
            for alpha in group.characters():
                cases += 1
                closed = coaug(flag, alpha)
                dual = coaug_via_duality(flag, alpha, augmentation)
                if closed != dual:
                    cx = {
                        "group": gspec,
                        "flag": str(flag),
                        "alpha": str(alpha),
                        "closed_form": str(closed),
                        "duality": str(dual),
                        "argv": _eval_argv(gspec, flag, f"({closed}) == ({dual})"),
                    }
                    return cases, cx
    return cases, None


def check_coaug_duality(cfg: SweepConfig) -> CheckResult:
    t0 = time.perf_counter()
    cases, cx = _duality_sweep(cfg.groups, cfg.max_flag_len)
    return _finish("check_coaug_duality", t0, cases, cx)


def _random_coeff(rng: random.Random, group) -> CoeffPoly:
    nontrivial = [c for c in group.characters() if not c.is_trivial]
    if not nontrivial:
        return CoeffPoly.const(group, rng.choice((1, -1)))
    kind = rng.randrange(4)
    if kind == 0:
        return CoeffPoly.const(group, rng.choice((1, -1)))
    if kind == 1:
        return CoeffPoly.const(group, rng.choice((1, -1))) * CoeffPoly.euler(rng.choice(nontrivial))
    if kind == 2:
        return CoeffPoly.euler(rng.choice(nontrivial)) * CoeffPoly.euler(rng.choice(nontrivial))
    return CoeffPoly.const(group, rng.choice((2, -2, 3)))


def _random_numerator(rng: random.Random, flag: Flag, shift: int, dim: int) -> SymPoly:
    """Random nonzero dimension-homogeneous polynomial of the given dimension."""
    while True:
        terms: dict = {}
        for _ in range(rng.randint(1, 3)):
            counts: dict = {}
            for _ in range(dim):
                i = rng.randint(0, flag.length)
                counts[i] = counts.get(i, 0) + 1
            mono = tuple(sorted(counts.items()))
            c = _random_coeff(rng, flag.group)
            zero = CoeffPoly.zero(flag.group)
            terms[mono] = terms.get(mono, zero) + c
        x = SymPoly(flag, shift, terms)
        if not x.is_zero:
            return x


def _random_denominator(rng: random.Random, flag: Flag, mode: str, total: int) -> dict:
    if mode == "mUP":
        alphas = [flag.group.identity]
    else:
        seen = set()
        alphas = []
        for c in flag.chars:
            if c.residues not in seen:
                seen.add(c.residues)
                alphas.append(c)
    denom: dict = {}
    for _ in range(total):
        al = rng.choice(alphas)
        denom[al] = denom.get(al, 0) + 1
    return denom


def _random_dim0_fraction(rng, flag, shift, mode, max_dim) -> LocFraction:
    total = rng.randint(0, max_dim)
    denom = _random_denominator(rng, flag, mode, total)
    num = _random_numerator(rng, flag, shift, total)
    return LocFraction(num, denom, mode)


def check_rewrite_roundtrip(cfg: SweepConfig) -> CheckResult:
    t0 = time.perf_counter()
    rng = random.Random(cfg.rng_seed)
    routes = (("MUP", -2, "b"), ("mUP", 2, "c"), ("MUP", 2, "c"))
    cases = 0
    cx = None
    for gspec in cfg.groups:
        group = parse_group(gspec)
        flag = Flag.cyclic(group, cfg.max_flag_len)
        for mode, shift, family in routes:
            one = LocFraction(SymPoly.one(flag, shift), {}, mode)
            samples = [one] + [
                _random_dim0_fraction(rng, flag, shift, mode, cfg.max_dimension)
                for _ in range(cfg.random_cases)
            ]
            for x in samples:
                cases += 1
                e = to_b_generators(x) if family == "b" else to_c_generators(x)
                y = expand_b(e, x.mode)
                if not frac_eq(y, x):
                    cx = {
                        "group": gspec,
                        "flag": str(flag),
                        "mode": mode,
                        "shift": shift,
                        "fraction": str(x),
                        "rewritten": str(e),
                        "expanded": str(y),
                        "argv": _eval_argv(
                            gspec, flag, f"({x}) == ({y})", shift=shift, theory=mode
                        ),
                    }
                    break
            if cx:
                break
        if cx:
            break
    return _finish("check_rewrite_roundtrip", t0, cases, cx)


def check_retraction(cfg: SweepConfig) -> CheckResult:
    t0 = time.perf_counter()
    cases = 0
    cx = None
    shift = -2
    for gspec in cfg.groups:
        group = parse_group(gspec)
        flag = Flag.cyclic(group, cfg.max_index)
        eps = group.identity
        rng = random.Random(cfg.rng_seed)
        for n in range(0, cfg.max_dimension + 1):
            monos = itertools.combinations_with_replacement(range(flag.length + 1), n)
            xs = []
            for combo in monos:
                counts: dict = {}
                for i in combo:
                    counts[i] = counts.get(i, 0) + 1
                xs.append(SymPoly(flag, shift, {tuple(sorted(counts.items())): 1}))
            # a few random coefficient-linear combinations per dimension
            for _ in range(3):
                if xs:
                    pick = rng.sample(xs, k=min(2, len(xs)))
                    acc = SymPoly.zero(flag, shift)
                    for p in pick:
                        acc = acc + _random_coeff(rng, group) * p
                    if not acc.is_zero:
                        xs.append(acc)
            for x in xs:
                cases += 1
                y = theta_mul(flag, eps, x)
                back = retract(y, n)
                if back != x:
                    cx = {
                        "group": gspec,
                        "flag": str(flag),
                        "dimension": n,
                        "input": str(x),
                        "retracted": str(back),
                        "argv": _eval_argv(gspec, flag, f"({back}) == ({x})", shift=shift),
                    }
                    break
            if cx:
                break
            # monomials without beta_0 retract to zero
            for combo in itertools.combinations_with_replacement(
                range(1, flag.length + 1), n + 1
            ):
                counts = {}
                for i in combo:
                    counts[i] = counts.get(i, 0) + 1
                x = SymPoly(flag, shift, {tuple(sorted(counts.items())): 1})
                cases += 1
                back = retract(x, n)
                if not back.is_zero:
                    cx = {
                        "group": gspec,
                        "flag": str(flag),
                        "dimension": n,
                        "input": str(x),
                        "retracted": str(back),
                        "argv": _eval_argv(gspec, flag, f"({back}) == 0", shift=shift),
                    }
                    break
            if cx:
                break
        if cx:
            break
    return _finish("check_retraction", t0, cases, cx)


def _cross_mul(a: LocFraction, b: LocFraction) -> tuple:
    """Numerators of a and b lifted to the common denominator."""
    flag, shift = a.num.flag, a.num.shift
    lift_a = SymPoly.one(flag, shift)
    lift_b = SymPoly.one(flag, shift)
    for al in set(a.denom) | set(b.denom):
        diff = b.denom.get(al, 0) - a.denom.get(al, 0)
        if diff > 0:
            lift_a = lift_a * theta_sym(flag, shift, al) ** diff
        elif diff < 0:
            lift_b = lift_b * theta_sym(flag, shift, al) ** (-diff)
    return a.num * lift_a, b.num * lift_b


def check_specialization_collapse(cfg: SweepConfig) -> CheckResult:
    t0 = time.perf_counter()
    cases = 0
    cx = None
    rng = random.Random(cfg.rng_seed)
    for gspec in cfg.groups:
        group = parse_group(gspec)
        flag = Flag.cyclic(group, max(group.order, 2))
        zero_asg = {c: 0 for c in group.characters() if not c.is_trivial}
        beta0 = ProjClass(flag, {0: 1})
        for alpha in group.characters():
            cases += 1
            collapsed = coaug(flag, alpha).specialize(zero_asg)
            if collapsed != beta0:
                cx = {
                    "group": gspec,
                    "flag": str(flag),
                    "alpha": str(alpha),
                    "collapsed": str(collapsed),
                    "argv": _eval_argv(gspec, flag, f"({collapsed}) == beta[0]"),
                }
                break
            cases += 1
            bth = btheta_expansion(flag, "b", alpha).specialize(zero_asg)
            if bth != BExpr.one(flag, "b"):
                cx = {
                    "group": gspec,
                    "flag": str(flag),
                    "alpha": str(alpha),
                    "collapsed": str(bth),
                    "argv": _eval_argv(gspec, flag, f"({bth}) == 1", shift=-2),
                }
                break
        if cx:
            break
        for _ in range(cfg.random_cases):
            x = _random_dim0_fraction(rng, flag, -2, "MUP", cfg.max_dimension)
            e = to_b_generators(x)
            bare = BExpr(e.flag, e.family, e.terms, {})
            ya = expand_b(e, "MUP")
            yb = expand_b(bare, "MUP")
            lhs, rhs = _cross_mul(ya, yb)
            cases += 1
            if lhs.specialize(zero_asg) != rhs.specialize(zero_asg):
                cx = {
                    "group": gspec,
                    "flag": str(flag),
                    "fraction": str(x),
                    "collapsed": str(e.specialize(zero_asg)),
                    "argv": _eval_argv(
                        gspec,
                        flag,
                        f"({lhs.specialize(zero_asg)}) == ({rhs.specialize(zero_asg)})",
                        shift=-2,
                    ),
                }
                break
        if cx:
            break
    if cx is None:
        # trivial-group presentations match the non-equivariant shape
        group = parse_group("1")
        flag = Flag.cyclic(group, 4)
        for theory in ("MU", "mU"):
            cases += 1
            pres = presentation(theory, flag)
            degrees = [g["degree"] for g in pres["generators"]]
            if degrees != [2, 4, 6, 8] or pres["inverted"]:
                cx = {
                    "group": "1",
                    "flag": str(flag),
                    "theory": theory,
                    "generators": pres["generators"],
                    "inverted": pres["inverted"],
                    "argv": ["present", "--theory", theory, "--group", "1", "--truncate", "4"],
                }
                break
    return _finish("check_specialization_collapse", t0, cases, cx)


def check_periodicity(cfg: SweepConfig) -> CheckResult:
    t0 = time.perf_counter()
    rng = random.Random(cfg.rng_seed)
    cases = 0
    cx = None
    for gspec in cfg.groups:
        group = parse_group(gspec)
        flag = Flag.cyclic(group, cfg.max_flag_len)
        for mode, shift in (("MUP", -2), ("mUP", 2)):
            alphas = [group.identity]
            if mode == "MUP":
                seen = {group.identity.residues}
                for c in flag.chars:
                    if c.residues not in seen:
                        seen.add(c.residues)
                        alphas.append(c)
            for _ in range(cfg.random_cases):
                total = rng.randint(0, cfg.max_dimension)
                extra = rng.randint(0, 2)
                denom = _random_denominator(rng, flag, mode, total)
                num = _random_numerator(rng, flag, shift, total + extra)
                a = LocFraction(num, denom, mode)
                alpha = rng.choice(alphas)
                lifted = dict(a.denom)
                lifted[alpha] = lifted.get(alpha, 0) + 1
                y = LocFraction(a.num, lifted, mode)
                cases += 1
                if not frac_eq(theta_mul(flag, alpha, y), a):
                    cx = {
                        "group": gspec,
                        "flag": str(flag),
                        "mode": mode,
                        "alpha": str(alpha),
                        "fraction": str(a),
                        "argv": _eval_argv(
                            gspec,
                            flag,
                            f"theta[{alpha}] * ({y}) == ({a})",
                            shift=shift,
                            theory=mode,
                        ),
                    }
                    break
                # injectivity on sampled polynomials
                cases += 1
                x = _random_numerator(rng, flag, shift, rng.randint(0, cfg.max_dimension))
                if theta_mul(flag, alpha, x).is_zero != x.is_zero:
                    cx = {
                        "group": gspec,
                        "flag": str(flag),
                        "mode": mode,
                        "alpha": str(alpha),
                        "input": str(x),
                        "argv": _eval_argv(
                            gspec, flag, f"theta[{alpha}] * ({x}) == 0", shift=shift
                        ),
                    }
                    break
            if cx:
                break
        if cx:
            break
    return _finish("check_periodicity", t0, cases, cx)


def _mutated_aug(flag: Flag, alpha, i: int) -> CoeffPoly:
    """Deliberately wrong augmentation: drops the inverse on the twist."""
    if i == 0:
        return CoeffPoly.one(flag.group)
    return euler_class(flag.rep(i).tensor(alpha))


def check_mutation_sensitivity(cfg: SweepConfig) -> CheckResult:
    """The duality sweep must catch the alpha-vs-alpha-inverse mutation on C4
    (where some character is not self-inverse) and stay silent on C2 (where
    every character is).  The sweep depth is pinned so a small configured
    flag length cannot make the detection vacuous."""
    t0 = time.perf_counter()
    cases_c4, cx_c4 = _duality_sweep(("Z4",), 5, _mutated_aug)
    cases_c2, cx_c2 = _duality_sweep(("Z2",), 5, _mutated_aug)
    cases = cases_c4 + cases_c2
    cx = None
    if cx_c4 is None:
        cx = {
            "reason": "the mutated augmentation went undetected on Z4",
            "argv": ["verify"],
        }
    elif cx_c2 is not None:
        cx = {
            "reason": "the mutated augmentation was flagged on Z2, "
            "where the twist is invisible",
            "detail": cx_c2,
            "argv": ["verify"],
        }
    return _finish("check_mutation_sensitivity", t0, cases, cx)


ALL_CHECKS = (
    check_coaug_duality,
    check_mutation_sensitivity,
    check_periodicity,
    check_retraction,
    check_rewrite_roundtrip,
    check_specialization_collapse,
)


def run_suite(cfg: SweepConfig | None = None) -> Report:
    """Run every check, sorted by name; overall status fails if any check fails."""
    cfg = cfg or SweepConfig()
    checks = [fn(cfg) for fn in sorted(ALL_CHECKS, key=lambda f: f.__name__)]
    status = "pass" if all(c.status == "pass" for c in checks) else "fail"
    return Report(status, cfg, checks)


def default_config() -> SweepConfig:
    return SweepConfig()


def load_config(path: str) -> SweepConfig:
    """Flat key = value file mirroring SweepConfig; '#' starts a comment."""
    values: dict = {}
    int_keys = {"max_flag_len", "max_dimension", "max_index", "random_cases", "rng_seed"}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SpecParseError(f"{path}:{lineno}: expected 'key = value'")
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if key == "groups":
                groups = tuple(g.strip() for g in val.split(",") if g.strip())
                for g in groups:
                    parse_group(g)
                values["groups"] = groups
            elif key in int_keys:
                try:
                    values[key] = int(val)
                except ValueError:
                    raise SpecParseError(f"{path}:{lineno}: {key} needs an integer") from None
            else:
                raise SpecParseError(f"{path}:{lineno}: unknown key {key!r}")
    return SweepConfig(**values)

import pytest

from equibord.coeff import CoeffPoly
from equibord.errors import MismatchError, PreconditionError, SpecParseError
from equibord.flags import Flag, ProjClass, aug, coaug, coaug_via_duality, pairing, parse_flag
from equibord.groups import parse_group

Z2 = parse_group("Z2")
Z4 = parse_group("Z4")


def test_flag_construction():
    f = parse_flag(Z2, "(0),(1),(0),(1)")
    assert f.length == 4
    assert f.group == Z2
    assert str(f) == "(0),(1),(0),(1)"
    assert f.is_complete
    assert not parse_flag(Z2, "(0),(0)").is_complete
    assert f.first_index(Z2.character((1,))) == 2
    assert parse_flag(Z2, "(0)").first_index(Z2.character((1,))) is None


def test_flag_requires_trivial_start():
    with pytest.raises(PreconditionError):
        parse_flag(Z2, "(1),(0)")
    with pytest.raises(PreconditionError):
        Flag(Z2, ())


def test_flag_parse_errors():
    with pytest.raises(SpecParseError):
        parse_flag(Z2, "")
    with pytest.raises(SpecParseError):
        parse_flag(Z2, "(0),(1")
    with pytest.raises(SpecParseError):
        parse_flag(Z2, "(0)),(1)")


def test_cyclic_flag():
    f = Flag.cyclic(Z4, 6)
    assert [c.residues for c in f.chars] == [(0,), (1,), (2,), (3,), (0,), (1,)]
    assert f.is_complete
    assert Flag.cyclic(parse_group("1"), 3).length == 3


def test_stages():
    f = parse_flag(Z4, "(0),(1),(2)")
    assert f.rep(0).dim == 0
    assert f.rep(2).dim == 2
    assert [c.residues for c in f.rep(3).summands] == [(0,), (1,), (2,)]
    with pytest.raises(PreconditionError):
        f.rep(4)


def test_projclass_module_ops():
    f = parse_flag(Z2, "(0),(1)")
    e = CoeffPoly.euler(Z2.character((1,)))
    x = ProjClass(f, {0: 1, 1: e})
    y = ProjClass(f, {1: e})
    assert (x - y) == ProjClass(f, {0: 1})
    assert (x + y).coefficient(1) == 2 * e
    assert (x * 2).coefficient(0) == CoeffPoly.const(Z2, 2)
    assert (e * x).coefficient(1) == e * e
    assert ProjClass(f, {}).is_zero
    assert x.coefficient(1) == e
    with pytest.raises(PreconditionError):
        ProjClass(f, {3: 1})
    g = parse_flag(Z2, "(0),(0)")
    with pytest.raises(MismatchError):
        x + ProjClass(g, {0: 1})


def test_projclass_degree_and_str():
    f = parse_flag(Z2, "(0),(1)")
    e = CoeffPoly.euler(Z2.character((1,)))
    theta = ProjClass(f, {0: 1, 1: e})
    assert theta.degree() == 0  # beta_i degree 2i balances e-degree -2i
    assert str(theta) == "beta[0] + e[(1)] * beta[1]"
    assert str(ProjClass(f, {})) == "0"
    with pytest.raises(PreconditionError):
        ProjClass(f, {0: 1, 1: 1}).degree()


def test_aug_values():
    f = parse_flag(Z2, "(0),(1),(0),(1)")
    eps, sig = Z2.characters()
    e = CoeffPoly.euler(sig)
    assert aug(f, eps, 0).is_one
    assert all(aug(f, eps, i).is_zero for i in range(1, 5))
    assert aug(f, sig, 1) == e
    assert all(aug(f, sig, i).is_zero for i in range(2, 5))
    with pytest.raises(PreconditionError):
        aug(f, sig, 5)
    with pytest.raises(MismatchError):
        aug(f, Z4.character((1,)), 1)


def test_coaug_truncates_at_first_occurrence():
    f = parse_flag(Z4, "(0),(1),(2),(3),(1)")
    sig = Z4.character((1,))
    th = coaug(f, sig)
    # truncation at index 2: only beta_0 and beta_1 appear
    assert sorted(th.coeffs) == [0, 1]
    assert th.coefficient(0).is_one
    assert th.coefficient(1) == CoeffPoly.euler(sig.inverse())
    assert coaug(f, Z4.identity) == ProjClass(f, {0: 1})


def test_coaug_needs_occurrence():
    f = parse_flag(Z4, "(0),(1)")
    with pytest.raises(PreconditionError):
        coaug(f, Z4.character((2,)))


def test_coaug_matches_duality_route():
    for spec, flagspec in [
        ("Z2", "(0),(1),(0),(1)"),
        ("Z4", "(0),(1),(2),(3),(0),(2)"),
        ("Z2xZ2", "(0,0),(0,1),(1,0),(1,1)"),
    ]:
        g = parse_group(spec)
        f = parse_flag(g, flagspec)
        for alpha in g.characters():
            assert coaug(f, alpha) == coaug_via_duality(f, alpha)


def test_duality_route_accepts_injected_augmentation():
    f = parse_flag(Z4, "(0),(1),(2),(3)")
    sig = Z4.character((1,))

    def twisted(flag, alpha, i):
        return aug(flag, alpha.inverse(), i)

    assert coaug_via_duality(f, sig, twisted) == coaug(f, sig.inverse())


def test_pairing_extracts_coefficients():
    f = parse_flag(Z2, "(0),(1)")
    sig = Z2.character((1,))
    th = coaug(f, sig)
    assert pairing(f, 0, th).is_one
    assert pairing(f, 1, th) == CoeffPoly.euler(sig)
    with pytest.raises(MismatchError):
        pairing(parse_flag(Z2, "(0)"), 0, th)


def test_projclass_specialize():
    f = parse_flag(Z2, "(0),(1)")
    sig = Z2.character((1,))
    th = coaug(f, sig)
    assert th.specialize({sig: 0}) == ProjClass(f, {0: 1})

"""
Unit tests for the built-in instance catalog and the annotation grammars.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from app.instances.boolean import MonotoneDNF, posbool_carrier_size
from app.instances.provenance import PolynomialN
from app.instances.registry import (
    ALL_NAMES, BUILTIN_NAMES, LATTICE_NAMES, M_SEMIRING_NAMES,
    builtin_instances, lattice_monus, make_instance, pointwise_monus,
)
from app.instances.security import SecurityLevel, embed_security
from app.utils.error_handler import AnnotationParseError, ConfigurationError, InapplicableError

S = SecurityLevel


class TestRegistry:
    """Lookup, caching and argument validation."""

    def test_catalog(self):
        assert len(BUILTIN_NAMES) == 15
        assert "int" not in M_SEMIRING_NAMES
        assert set(LATTICE_NAMES) <= set(BUILTIN_NAMES)
        assert ALL_NAMES[-3:] == ("nat_sat", "tropical_trunc", "fuzz_grid")

    def test_builtin_instances_in_catalog_order(self):
        assert tuple(inst.name for inst in builtin_instances()) == BUILTIN_NAMES

    def test_instances_are_cached(self):
        assert make_instance("nat") is make_instance(" NAT ")
        assert make_instance("posbool", ["x", "y"]) is make_instance("posbool", ("x", "y", "x"))

    def test_unknown_name(self):
        with pytest.raises(ConfigurationError) as excinfo:
            make_instance("quaternion")
        assert excinfo.value.error_code == "unknown_instance"

    def test_empty_variables(self):
        with pytest.raises(ConfigurationError) as excinfo:
            make_instance("natpoly", [" ", ""])
        assert excinfo.value.error_code == "empty_variables"

    def test_bad_bound(self):
        with pytest.raises(ConfigurationError) as excinfo:
            make_instance("nat_sat", bound=0)
        assert excinfo.value.error_code == "missing_bound"

    def test_default_bounds(self):
        assert make_instance("nat_sat").label == "nat_sat[7]"
        assert len(make_instance("fuzz_grid").elements) == 5


class TestNumericInstances:
    """Booleans, numbers, tropical and chain annotations."""

    def test_bool_literals(self, boolean):
        assert boolean.parse("TRUE") is True
        assert boolean.parse("0") is False
        assert boolean.render(True) == "true"
        with pytest.raises(AnnotationParseError):
            boolean.parse("maybe")

    def test_nat_rejects_negative(self, nat):
        with pytest.raises(AnnotationParseError):
            nat.parse("-1")

    def test_int_parses_negative(self, integers):
        assert integers.parse("-3") == -3

    def test_real_plus_exact(self):
        real = make_instance("real_plus")
        assert real.parse("0.5") == Fraction(1, 2)
        assert real.render(Fraction(3, 4)) == "3/4"
        assert real.monus(Fraction(1, 3), Fraction(1, 2)) == 0
        with pytest.raises(AnnotationParseError):
            real.parse("1/0")

    def test_tropical(self):
        tropical = make_instance("tropical")
        assert tropical.parse("inf") == math.inf
        assert tropical.render(math.inf) == "inf"
        assert tropical.add(3, 5) == 3
        assert tropical.mul(3, 5) == 8
        assert tropical.monus(3, 5) == 3
        assert tropical.monus(5, 3) == math.inf

    def test_tropical_trunc_caps_products(self):
        trunc = make_instance("tropical_trunc", bound=3)
        assert trunc.mul(2, 2) == math.inf
        with pytest.raises(AnnotationParseError):
            trunc.parse("4")

    def test_tvl_grid(self):
        tvl = make_instance("tvl")
        assert tvl.parse("1/2") == Fraction(1, 2)
        with pytest.raises(AnnotationParseError):
            tvl.parse("1/3")

    def test_fuzz_chain_monus(self):
        fuzz = make_instance("fuzz")
        assert fuzz.monus(Fraction(3, 4), Fraction(1, 2)) == Fraction(3, 4)
        assert fuzz.monus(Fraction(1, 4), Fraction(1, 2)) == 0
        with pytest.raises(AnnotationParseError):
            fuzz.parse("3/2")


class TestSecurityInstances:
    """The clearance chain and its credential-set repair."""

    def test_carrier_follows_natural_order(self, security):
        assert security.elements == (S.NEVER, S.TOP_SECRET, S.SECRET, S.CONFIDENTIAL, S.PUBLIC)

    def test_operations(self, security):
        assert security.add(S.SECRET, S.TOP_SECRET) == S.SECRET
        assert security.mul(S.SECRET, S.TOP_SECRET) == S.TOP_SECRET
        assert security.zero == S.NEVER
        assert security.one == S.PUBLIC

    def test_parse(self, security):
        assert security.parse(" S ") is S.SECRET
        with pytest.raises(AnnotationParseError):
            security.parse("X")

    def test_sprime_literals(self):
        sprime = make_instance("sprime")
        assert sprime.render(sprime.parse("{S, C}")) == "{C,S}"
        assert sprime.render(sprime.zero) == "{}"
        assert sprime.render(sprime.one) == "{1s,C,S,T}"
        with pytest.raises(AnnotationParseError):
            sprime.parse("{0s}")
        with pytest.raises(AnnotationParseError):
            sprime.parse("C,S")

    def test_sprime_has_sixteen_elements(self):
        assert len(make_instance("sprime").elements) == 16

    @pytest.mark.parametrize("level,expected", [
        (S.PUBLIC, {S.PUBLIC, S.CONFIDENTIAL, S.SECRET, S.TOP_SECRET}),
        (S.SECRET, {S.SECRET, S.TOP_SECRET}),
        (S.TOP_SECRET, {S.TOP_SECRET}),
        (S.NEVER, set()),
    ])
    def test_embedding(self, level, expected):
        assert embed_security(level) == frozenset(expected)


class TestBooleanExpressionInstances:
    """PosBool[X] and Bool[X]."""

    def test_posbool_absorption(self):
        posbool = make_instance("posbool")
        assert posbool.render(posbool.parse("x | x&y")) == "x"
        assert posbool.render(posbool.parse("z&y | x&z")) == "x&z | y&z"

    def test_posbool_constants(self):
        posbool = make_instance("posbool")
        assert posbool.render(posbool.zero) == "0"
        assert posbool.render(posbool.one) == "1"
        assert posbool.parse("1") == posbool.one

    def test_posbool_monus_hint(self):
        posbool = make_instance("posbool")
        a, b = posbool.parse("x | y | z"), posbool.parse("x | y")
        difference = posbool.monus(a, b)
        assert posbool.render(difference) == "z"
        assert posbool.render(posbool.mul(difference, b)) == "x&z | y&z"

    def test_posbool_rejects_negation(self):
        with pytest.raises(AnnotationParseError):
            make_instance("posbool").parse("!x")

    def test_posbool_small_carrier_is_finite(self):
        assert len(make_instance("posbool", ["x", "y"]).elements) == 6

    def test_boolexpr_truth_tables(self):
        boolexpr = make_instance("boolexpr", ["x"])
        assert boolexpr.is_finite
        assert boolexpr.render(boolexpr.parse("!x")) == "!x"
        assert boolexpr.render(boolexpr.parse("x | !x")) == "1"
        assert boolexpr.parse("x & !x") == boolexpr.zero

    def test_boolexpr_three_variables_is_sampled(self):
        assert not make_instance("boolexpr").is_finite

    def test_undeclared_variable(self):
        with pytest.raises(AnnotationParseError):
            make_instance("boolexpr", ["x"]).parse("y")


class TestProvenanceInstances:
    """Polynomials, monomial sets, witness families and Trio bags."""

    def test_natpoly_combines_like_terms(self):
        natpoly = make_instance("natpoly")
        assert natpoly.render(natpoly.parse("2*x + x")) == "3*x"
        assert natpoly.render(natpoly.parse("x*x + x")) == "x^2 + x"
        assert natpoly.render(natpoly.one) == "1"
        assert natpoly.render(natpoly.zero) == "0"

    def test_natpoly_monus_is_coefficientwise(self):
        natpoly = make_instance("natpoly")
        result = natpoly.monus(natpoly.parse("3*x + y"), natpoly.parse("x + 2*y + z"))
        assert natpoly.render(result) == "2*x"

    def test_natpoly_rejects_undeclared_variable(self):
        with pytest.raises(AnnotationParseError):
            make_instance("natpoly", ["x"]).parse("y")

    def test_boolpoly_is_idempotent(self):
        boolpoly = make_instance("boolpoly")
        assert boolpoly.render(boolpoly.parse("x + x + 1")) == "x + 1"

    def test_why_keeps_witnesses_without_absorption(self):
        why = make_instance("why")
        value = why.parse("{{}, {x}}")
        assert why.render(value) == "{{x},{}}"
        assert why.render(why.zero) == "{}"

    def test_trio_coefficients(self):
        trio = make_instance("trio")
        assert trio.render(trio.parse("{x} + {} + {x}")) == "2*{x} + {}"
        with pytest.raises(AnnotationParseError):
            trio.parse("a*{x}")


class TestCanonicalForms:
    """Raw values collapse to one representative; parsed literals are already canonical."""

    def test_posbool_absorbs_clauses(self):
        posbool = make_instance("posbool")
        assert posbool.canonicalize([{"x"}, {"x", "y"}, {"z"}]) == MonotoneDNF.of([{"x"}, {"z"}])

    def test_natpoly_drops_zero_terms_and_orders_variables(self):
        natpoly = make_instance("natpoly")
        raw = {(("x", 1),): 0, (("y", 1),): 2, (("y", 1), ("x", 1)): 1}
        expected = PolynomialN.of({(("y", 1),): 2, (("x", 1), ("y", 1)): 1})
        assert natpoly.canonicalize(raw) == expected
        assert natpoly.render(natpoly.canonicalize(raw)) == "x*y + 2*y"

    def test_real_plus_reduces_fractions(self):
        assert make_instance("real_plus").canonicalize(Fraction(4, 8)) == Fraction(1, 2)

    @pytest.mark.parametrize("name", ["posbool", "natpoly", "boolpoly", "why", "trio", "boolexpr", "real_plus"])
    def test_idempotent_on_elements(self, name):
        inst = make_instance(name)
        value = inst.mul(inst.add(inst.one, inst.one), inst.one)
        assert inst.canonicalize(value) == value
        assert inst.canonicalize(inst.zero) == inst.zero

    def test_read_parses_then_canonicalizes(self):
        natpoly = make_instance("natpoly")
        assert natpoly.read("y*x + x*y") == natpoly.parse("2*x*y")
        assert make_instance("real_plus").read("4/8") == Fraction(1, 2)

    def test_posbool_carrier_size(self):
        assert posbool_carrier_size(("x", "y", "z")) == 20
        assert posbool_carrier_size(("x", "y")) == 6
        assert len(make_instance("posbool").carrier.elements) == 20


class TestClosedFormMonus:
    """The lattice and pointwise monus families."""

    def test_lattice_family(self, security):
        assert lattice_monus(security, S.SECRET, S.TOP_SECRET) == S.SECRET
        assert lattice_monus(security, S.SECRET, S.CONFIDENTIAL) == S.NEVER

    def test_pointwise_family(self, nat):
        assert pointwise_monus(nat, 5, 2) == 3
        assert pointwise_monus(make_instance("sprime"), frozenset({S.SECRET, S.PUBLIC}),
                               frozenset({S.PUBLIC})) == frozenset({S.SECRET})

    def test_wrong_family(self, nat, security):
        with pytest.raises(InapplicableError):
            lattice_monus(nat, 1, 2)
        with pytest.raises(InapplicableError):
            pointwise_monus(security, S.SECRET, S.SECRET)


class TestMonusLaws:
    """Property checks of the Galois characterization on countable carriers."""

    @given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))
    def test_nat_galois(self, a, b, c):
        nat = make_instance("nat")
        assert (nat.monus(a, b) <= c) == (a <= b + c)

    @given(st.fractions(min_value=0, max_value=10), st.fractions(min_value=0, max_value=10),
           st.fractions(min_value=0, max_value=10))
    @settings(max_examples=50)
    def test_real_plus_a12(self, a, b, c):
        real = make_instance("real_plus")
        assert real.monus(a, real.add(b, c)) == real.monus(real.monus(a, b), c)

    @given(st.sampled_from(list(SecurityLevel)), st.sampled_from(list(SecurityLevel)))
    def test_security_a11(self, a, b):
        security = make_instance("security")
        lhs = security.add(a, security.monus(b, a))
        rhs = security.add(b, security.monus(a, b))
        assert lhs == rhs

"""
Provenance annotations: polynomials, monomial sets, witness families and Trio bags.

Monomials are tuples of (variable, exponent) pairs sorted by the instance's
variable order; the empty tuple is the constant monomial. Printing orders
monomials graded-lexicographically.
"""

import random
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from ..core.algebra import CountableCarrier, SemiringInstance
from .literals import IDENTIFIER, annotation_error, check_variable

Monomial = Tuple[Tuple[str, int], ...]
ONE_MONOMIAL: Monomial = ()

_FACTOR = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)(?:\s*\^\s*(\d+))?)\s*")


class _VariableOrder:
    """Variable positions and the printing orders derived from them."""

    def __init__(self, variables: Sequence[str]):
        self.variables = tuple(variables)
        self.position = {v: i for i, v in enumerate(self.variables)}

    def monomial(self, exponents: Mapping[str, int]) -> Monomial:
        return tuple(sorted(((v, e) for v, e in exponents.items() if e > 0),
                            key=lambda item: self.position[item[0]]))

    def grlex_key(self, monomial: Monomial):
        """Higher degree first, then larger exponent vectors first."""
        exponents = dict(monomial)
        vector = tuple(exponents.get(v, 0) for v in self.variables)
        return -sum(vector), tuple(-e for e in vector)

    def set_key(self, witness: FrozenSet[str]):
        return -len(witness), sorted(self.position[v] for v in witness)

    def sorted_set(self, witness: FrozenSet[str]) -> List[str]:
        return sorted(witness, key=self.position.__getitem__)


def multiply_monomials(a: Monomial, b: Monomial, order: _VariableOrder) -> Monomial:
    exponents: Counter = Counter(dict(a))
    exponents.update(dict(b))
    return order.monomial(exponents)


def render_monomial(monomial: Monomial, coefficient: int = 1) -> str:
    factors = [v if e == 1 else f"{v}^{e}" for v, e in monomial]
    if coefficient != 1 or not factors:
        factors.insert(0, str(coefficient))
    return "*".join(factors)


def parse_polynomial_terms(text: str, instance: str, order: _VariableOrder) -> Dict[Monomial, int]:
    """`2*x*y + z^2 + 1` into {monomial: coefficient}; like terms are combined."""
    if not text.strip():
        raise annotation_error(text, instance, "empty polynomial")
    terms: Counter = Counter()
    for term in text.split("+"):
        coefficient = 1
        exponents: Counter = Counter()
        if not term.strip():
            raise annotation_error(text, instance, "empty term")
        for factor in term.split("*"):
            match = _FACTOR.fullmatch(factor)
            if not match:
                raise annotation_error(text, instance, f"malformed factor '{factor.strip()}'")
            number, name, power = match.groups()
            if number is not None:
                coefficient *= int(number)
            else:
                check_variable(name, order.variables, text, instance)
                exponents[name] += int(power) if power else 1
        if coefficient:
            terms[order.monomial(exponents)] += coefficient
    return dict(terms)


def _sample_monomial(rng: random.Random, order: _VariableOrder) -> Monomial:
    exponents: Counter = Counter()
    for _ in range(rng.randint(0, 2)):
        exponents[rng.choice(order.variables)] += 1
    return order.monomial(exponents)


# --- N[X] ---

@dataclass(frozen=True)
class PolynomialN:
    """Monomial -> positive coefficient; no zero entries."""

    terms: FrozenSet[Tuple[Monomial, int]]

    @classmethod
    def of(cls, mapping: Mapping[Monomial, int]) -> "PolynomialN":
        return cls(frozenset((m, c) for m, c in mapping.items() if c > 0))

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)


def make_natpoly(variables: Sequence[str]) -> SemiringInstance:
    order = _VariableOrder(variables)

    def add(a: PolynomialN, b: PolynomialN) -> PolynomialN:
        total = Counter(a.as_dict())
        total.update(b.as_dict())
        return PolynomialN.of(total)

    def mul(a: PolynomialN, b: PolynomialN) -> PolynomialN:
        product: Counter = Counter()
        for m1, c1 in a.terms:
            for m2, c2 in b.terms:
                product[multiply_monomials(m1, m2, order)] += c1 * c2
        return PolynomialN.of(product)

    def monus(a: PolynomialN, b: PolynomialN) -> PolynomialN:
        """Coefficientwise truncated subtraction."""
        other = b.as_dict()
        return PolynomialN.of({m: c - other.get(m, 0) for m, c in a.terms})

    def leq(a: PolynomialN, b: PolynomialN) -> bool:
        other = b.as_dict()
        return all(c <= other.get(m, 0) for m, c in a.terms)

    def render(value: PolynomialN) -> str:
        if not value.terms:
            return "0"
        return " + ".join(render_monomial(m, c) for m, c in sorted(value.terms, key=lambda t: order.grlex_key(t[0])))

    def parse(text: str) -> PolynomialN:
        if text.strip() == "0":
            return PolynomialN(frozenset())
        return PolynomialN.of(parse_polynomial_terms(text, "natpoly", order))

    def sample(rng: random.Random, size: int) -> PolynomialN:
        terms: Counter = Counter()
        for _ in range(rng.randint(0, min(max(size, 1), 3))):
            terms[_sample_monomial(rng, order)] += rng.randint(1, 3)
        return PolynomialN.of(terms)

    def simplicity(value: PolynomialN):
        return sum(c * (1 + sum(e for _, e in m)) for m, c in value.terms), len(value.terms)

    def simpler(value: PolynomialN) -> Iterable[PolynomialN]:
        candidates = [PolynomialN(frozenset()), PolynomialN.of({ONE_MONOMIAL: 1})]
        current = value.as_dict()
        for monomial, coefficient in sorted(value.terms, key=lambda t: order.grlex_key(t[0])):
            candidates.append(PolynomialN.of({m: c for m, c in current.items() if m != monomial}))
            if coefficient > 1:
                candidates.append(PolynomialN.of({**current, monomial: coefficient - 1}))
        return candidates

    def canonicalize(raw) -> PolynomialN:
        terms: Counter = Counter()
        for m, c in (raw.as_dict() if isinstance(raw, PolynomialN) else dict(raw)).items():
            terms[order.monomial(dict(m))] += c
        return PolynomialN.of(terms)

    triples = (("x + 1", "x", "1"),) if "x" in order.variables else ()
    return SemiringInstance(
        name="natpoly",
        display="N[X]",
        params=order.variables,
        carrier=CountableCarrier(sample),
        add=add,
        mul=mul,
        zero=PolynomialN(frozenset()),
        one=PolynomialN.of({ONE_MONOMIAL: 1}),
        parse=parse,
        render=render,
        canonicalize=canonicalize,
        monus=monus,
        leq=leq,
        simplicity=simplicity,
        simpler=simpler,
        candidate_triples=triples,
    )


# --- B[X] ---

@dataclass(frozen=True)
class BoolMonomialSet:
    monomials: FrozenSet[Monomial]


def make_boolpoly(variables: Sequence[str]) -> SemiringInstance:
    order = _VariableOrder(variables)

    def mul(a: BoolMonomialSet, b: BoolMonomialSet) -> BoolMonomialSet:
        return BoolMonomialSet(frozenset(multiply_monomials(x, y, order) for x in a.monomials for y in b.monomials))

    def render(value: BoolMonomialSet) -> str:
        if not value.monomials:
            return "0"
        return " + ".join(render_monomial(m) for m in sorted(value.monomials, key=order.grlex_key))

    def parse(text: str) -> BoolMonomialSet:
        if text.strip() == "0":
            return BoolMonomialSet(frozenset())
        return BoolMonomialSet(frozenset(m for m, c in parse_polynomial_terms(text, "boolpoly", order).items() if c > 0))

    def sample(rng: random.Random, size: int) -> BoolMonomialSet:
        count = rng.randint(0, min(max(size, 1), 3))
        return BoolMonomialSet(frozenset(_sample_monomial(rng, order) for _ in range(count)))

    def simpler(value: BoolMonomialSet) -> Iterable[BoolMonomialSet]:
        return [BoolMonomialSet(frozenset())] + [
            BoolMonomialSet(value.monomials - {m}) for m in sorted(value.monomials, key=order.grlex_key)
        ]

    def canonicalize(raw) -> BoolMonomialSet:
        monomials = raw.monomials if isinstance(raw, BoolMonomialSet) else raw
        return BoolMonomialSet(frozenset(order.monomial(dict(m)) for m in monomials))

    triples = (("x + 1", "x", "1"),) if "x" in order.variables else ()
    return SemiringInstance(
        name="boolpoly",
        display="B[X]",
        params=order.variables,
        carrier=CountableCarrier(sample),
        add=lambda a, b: BoolMonomialSet(a.monomials | b.monomials),
        mul=mul,
        zero=BoolMonomialSet(frozenset()),
        one=BoolMonomialSet(frozenset({ONE_MONOMIAL})),
        parse=parse,
        render=render,
        canonicalize=canonicalize,
        monus=lambda a, b: BoolMonomialSet(a.monomials - b.monomials),
        leq=lambda a, b: a.monomials <= b.monomials,
        simplicity=lambda v: (len(v.monomials), sum(e for m in v.monomials for _, e in m)),
        simpler=simpler,
        candidate_triples=triples,
    )


# --- Witness-set syntax shared by Why(X) and Trio[X] ---

def _parse_witness_set(text: str, whole: str, instance: str, order: _VariableOrder) -> FrozenSet[str]:
    stripped = text.strip()
    if not (stripped.startswith("{") and stripped.endswith("}")):
        raise annotation_error(whole, instance, f"expected a braced witness set, got '{stripped}'")
    body = stripped[1:-1].strip()
    if not body:
        return frozenset()
    names = [part.strip() for part in body.split(",")]
    for name in names:
        if not IDENTIFIER.fullmatch(name):
            raise annotation_error(whole, instance, f"malformed variable '{name}'")
        check_variable(name, order.variables, whole, instance)
    return frozenset(names)


def _render_witness_set(witness: FrozenSet[str], order: _VariableOrder) -> str:
    return "{" + ",".join(order.sorted_set(witness)) + "}"


def _split_top_level(body: str) -> List[str]:
    """Splits `{x,y},{z}` on commas outside braces."""
    parts, depth, start = [], 0, 0
    for index, char in enumerate(body):
        if char == "{":
            depth += 1
        elif char == "}":
            depth -= 1
        elif char == "," and depth == 0:
            parts.append(body[start:index])
            start = index + 1
    parts.append(body[start:])
    return parts


def _sample_witness_set(rng: random.Random, order: _VariableOrder) -> FrozenSet[str]:
    width = rng.randint(0, min(2, len(order.variables)))
    return frozenset(rng.sample(order.variables, width))


# --- Why(X) ---

@dataclass(frozen=True)
class WitnessFamily:
    """A set of witness sets, kept without absorption."""

    witnesses: FrozenSet[FrozenSet[str]]


def make_why(variables: Sequence[str]) -> SemiringInstance:
    order = _VariableOrder(variables)

    def render(value: WitnessFamily) -> str:
        ordered = sorted(value.witnesses, key=order.set_key)
        return "{" + ",".join(_render_witness_set(w, order) for w in ordered) + "}"

    def parse(text: str) -> WitnessFamily:
        stripped = text.strip()
        if not (stripped.startswith("{") and stripped.endswith("}")):
            raise annotation_error(text, "why", "expected a set of witness sets such as {{x,y},{z}}")
        body = stripped[1:-1].strip()
        if not body:
            return WitnessFamily(frozenset())
        return WitnessFamily(frozenset(_parse_witness_set(p, text, "why", order) for p in _split_top_level(body)))

    def sample(rng: random.Random, size: int) -> WitnessFamily:
        count = rng.randint(0, min(max(size, 1), 3))
        return WitnessFamily(frozenset(_sample_witness_set(rng, order) for _ in range(count)))

    def simpler(value: WitnessFamily) -> Iterable[WitnessFamily]:
        return [WitnessFamily(frozenset())] + [
            WitnessFamily(value.witnesses - {w}) for w in sorted(value.witnesses, key=order.set_key)
        ]

    triples = (("{{x},{}}", "{{x}}", "{{}}"),) if "x" in order.variables else ()
    return SemiringInstance(
        name="why",
        display="Why(X)",
        params=order.variables,
        carrier=CountableCarrier(sample),
        add=lambda a, b: WitnessFamily(a.witnesses | b.witnesses),
        mul=lambda a, b: WitnessFamily(frozenset(x | y for x in a.witnesses for y in b.witnesses)),
        zero=WitnessFamily(frozenset()),
        one=WitnessFamily(frozenset({frozenset()})),
        parse=parse,
        render=render,
        canonicalize=lambda raw: WitnessFamily(frozenset(
            frozenset(w) for w in (raw.witnesses if isinstance(raw, WitnessFamily) else raw))),
        monus=lambda a, b: WitnessFamily(a.witnesses - b.witnesses),
        leq=lambda a, b: a.witnesses <= b.witnesses,
        simplicity=lambda v: (len(v.witnesses), sum(len(w) for w in v.witnesses)),
        simpler=simpler,
        candidate_triples=triples,
    )


# --- Trio[X] ---

@dataclass(frozen=True)
class TrioBag:
    """Witness set -> positive coefficient."""

    entries: FrozenSet[Tuple[FrozenSet[str], int]]

    @classmethod
    def of(cls, mapping: Mapping[FrozenSet[str], int]) -> "TrioBag":
        return cls(frozenset((frozenset(w), c) for w, c in mapping.items() if c > 0))

    def as_dict(self) -> Dict[FrozenSet[str], int]:
        return dict(self.entries)


def make_trio(variables: Sequence[str]) -> SemiringInstance:
    order = _VariableOrder(variables)

    def add(a: TrioBag, b: TrioBag) -> TrioBag:
        total = Counter(a.as_dict())
        total.update(b.as_dict())
        return TrioBag.of(total)

    def mul(a: TrioBag, b: TrioBag) -> TrioBag:
        product: Counter = Counter()
        for w1, c1 in a.entries:
            for w2, c2 in b.entries:
                product[w1 | w2] += c1 * c2
        return TrioBag.of(product)

    def monus(a: TrioBag, b: TrioBag) -> TrioBag:
        other = b.as_dict()
        return TrioBag.of({w: c - other.get(w, 0) for w, c in a.entries})

    def leq(a: TrioBag, b: TrioBag) -> bool:
        other = b.as_dict()
        return all(c <= other.get(w, 0) for w, c in a.entries)

    def render(value: TrioBag) -> str:
        if not value.entries:
            return "0"
        ordered = sorted(value.entries, key=lambda e: order.set_key(e[0]))
        return " + ".join(
            _render_witness_set(w, order) if c == 1 else f"{c}*{_render_witness_set(w, order)}"
            for w, c in ordered
        )

    def parse(text: str) -> TrioBag:
        if text.strip() == "0":
            return TrioBag(frozenset())
        total: Counter = Counter()
        for term in text.split("+"):
            coefficient, _, witness = term.strip().rpartition("*")
            if coefficient and not coefficient.strip().isdigit():
                raise annotation_error(text, "trio", f"malformed coefficient '{coefficient.strip()}'")
            total[_parse_witness_set(witness, text, "trio", order)] += int(coefficient) if coefficient else 1
        return TrioBag.of(total)

    def sample(rng: random.Random, size: int) -> TrioBag:
        total: Counter = Counter()
        for _ in range(rng.randint(0, min(max(size, 1), 3))):
            total[_sample_witness_set(rng, order)] += rng.randint(1, 3)
        return TrioBag.of(total)

    def simpler(value: TrioBag) -> Iterable[TrioBag]:
        candidates = [TrioBag(frozenset())]
        current = value.as_dict()
        for witness, coefficient in sorted(value.entries, key=lambda e: order.set_key(e[0])):
            candidates.append(TrioBag.of({w: c for w, c in current.items() if w != witness}))
            if coefficient > 1:
                candidates.append(TrioBag.of({**current, witness: coefficient - 1}))
        return candidates

    triples = (("{x} + {}", "{x}", "{}"),) if "x" in order.variables else ()
    return SemiringInstance(
        name="trio",
        display="Trio[X]",
        params=order.variables,
        carrier=CountableCarrier(sample),
        add=add,
        mul=mul,
        zero=TrioBag(frozenset()),
        one=TrioBag.of({frozenset(): 1}),
        parse=parse,
        render=render,
        canonicalize=lambda raw: TrioBag.of(raw.as_dict() if isinstance(raw, TrioBag) else dict(raw)),
        monus=monus,
        leq=leq,
        simplicity=lambda v: (sum(c * (1 + len(w)) for w, c in v.entries), len(v.entries)),
        simpler=simpler,
        candidate_triples=triples,
    )

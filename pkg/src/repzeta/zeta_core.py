"""Finitely supported representation zeta functions.

A :class:`ZetaSeries` is the finite Dirichlet-type sum ``sum mult * deg**(-s)``
with polynomial multiplicities and degrees.  Terms are kept merged by degree;
each term remembers which sources contributed to it (``provenance``) so that
assembled series can be audited row by row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import EpsilonMismatch, ZeroIndex
from .polyq import ONE, ZERO, RatPoly, strip_q_power

PROBE_QS = (2, 3, 4, 5, 7, 8, 9, 11, 13)


def check_sign(eps: int) -> int:
    if eps not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {eps!r}")
    return eps


@dataclass(frozen=True)
class Term:
    mult: RatPoly
    deg: RatPoly
    provenance: tuple[str, ...] = ()


@dataclass(frozen=True)
class ZetaSeries:
    """Normalized multiset of ``(mult, deg)`` terms for a group of sign ``epsilon``."""

    terms: tuple[Term, ...]
    epsilon: int
    label: str = ""

    @classmethod
    def build(
        cls,
        pairs: Iterable[tuple[RatPoly, RatPoly] | Term],
        epsilon: int,
        label: str = "",
        tag: str | None = None,
    ) -> "ZetaSeries":
        """Normalize arbitrary pairs: merge equal degrees, drop zero multiplicities."""
        check_sign(epsilon)
        mults: dict[RatPoly, RatPoly] = {}
        prov: dict[RatPoly, list[str]] = {}
        for item in pairs:
            if isinstance(item, Term):
                m, d, p = item.mult, item.deg, item.provenance
            else:
                m, d = item
                m, d, p = RatPoly.coerce(m), RatPoly.coerce(d), ()
            if tag is not None:
                p = (tag,)
            if d.is_zero():
                raise ValueError("a character degree cannot be the zero polynomial")
            mults[d] = mults.get(d, ZERO) + m
            bucket = prov.setdefault(d, [])
            for t in p:
                if t not in bucket:
                    bucket.append(t)
        terms = tuple(
            Term(mults[d], d, tuple(prov[d]))
            for d in sorted(mults, key=RatPoly.sort_key)
            if not mults[d].is_zero()
        )
        return cls(terms, epsilon, label)

    @classmethod
    def empty(cls, epsilon: int, label: str = "") -> "ZetaSeries":
        return cls((), check_sign(epsilon), label)

    @classmethod
    def trivial(cls, epsilon: int) -> "ZetaSeries":
        return cls.build([(ONE, ONE)], epsilon, "1")

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def as_dict(self) -> dict[RatPoly, RatPoly]:
        return {t.deg: t.mult for t in self.terms}

    def relabel(self, label: str) -> "ZetaSeries":
        return ZetaSeries(self.terms, self.epsilon, label)

    def with_epsilon(self, eps: int) -> "ZetaSeries":
        """Same terms, re-tagged with the ambient sign ``eps``."""
        if self.epsilon == eps:
            return self
        return ZetaSeries(self.terms, check_sign(eps), self.label)

    def tagged(self, tag: str) -> "ZetaSeries":
        return ZetaSeries(
            tuple(Term(t.mult, t.deg, (tag,)) for t in self.terms), self.epsilon, self.label
        )

    # -- evaluation ---------------------------------------------------------

    def at(self, q: int) -> list[tuple[Fraction, Fraction]]:
        """Evaluate every term at the integer ``q`` (no re-merging)."""
        return [(t.mult(q), t.deg(q)) for t in self.terms]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "epsilon": self.epsilon,
            "terms": [{"mult": t.mult.to_json(), "deg": t.deg.to_json()} for t in self.terms],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ZetaSeries":
        pairs = [(RatPoly.from_json(t["mult"]), RatPoly.from_json(t["deg"])) for t in data["terms"]]
        return cls.build(pairs, int(data["epsilon"]), data.get("label", ""))


def _same_eps(a: ZetaSeries, b: ZetaSeries) -> int:
    if a.epsilon != b.epsilon:
        raise EpsilonMismatch(f"epsilon {a.epsilon} vs {b.epsilon} ({a.label!r}, {b.label!r})")
    return a.epsilon


def merge(a: ZetaSeries, b: ZetaSeries, label: str | None = None) -> ZetaSeries:
    eps = _same_eps(a, b)
    if label is None:
        label = " + ".join(x for x in (a.label, b.label) if x)
    return ZetaSeries.build(a.terms + b.terms, eps, label)


def merge_all(series: Iterable[ZetaSeries], epsilon: int, label: str = "") -> ZetaSeries:
    terms: list[Term] = []
    for s in series:
        if s.epsilon != epsilon:
            raise EpsilonMismatch(f"epsilon {s.epsilon} in a merge over epsilon {epsilon}")
        terms.extend(s.terms)
    return ZetaSeries.build(terms, epsilon, label)


def product(a: ZetaSeries, b: ZetaSeries, label: str | None = None) -> ZetaSeries:
    """Zeta function of the direct product: Irr(AxB) is the set of outer tensors."""
    eps = _same_eps(a, b)
    if label is None:
        label = f"{a.label} x {b.label}"
    pairs = [
        Term(ta.mult * tb.mult, ta.deg * tb.deg, ta.provenance + tb.provenance)
        for ta in a.terms
        for tb in b.terms
    ]
    return ZetaSeries.build(pairs, eps, label)


def scale_degrees(a: ZetaSeries, index: RatPoly) -> ZetaSeries:
    index = RatPoly.coerce(index)
    if index.is_zero():
        raise ZeroIndex(f"zero induction index for {a.label!r}")
    return ZetaSeries.build(
        [Term(t.mult, t.deg * index, t.provenance) for t in a.terms], a.epsilon, a.label
    )


def scale_multiplicities(a: ZetaSeries, factor: RatPoly) -> ZetaSeries:
    factor = RatPoly.coerce(factor)
    return ZetaSeries.build(
        [Term(t.mult * factor, t.deg, t.provenance) for t in a.terms], a.epsilon, a.label
    )


def special_value(a: ZetaSeries, s: int) -> RatPoly:
    """``sum mult * deg**(-s)`` for an integer ``s <= 0``."""
    if s > 0:
        raise ValueError("special values are only polynomial for s <= 0")
    acc = ZERO
    for t in a.terms:
        acc = acc + t.mult * t.deg ** (-s)
    return acc


def degree_set(a: ZetaSeries) -> set[RatPoly]:
    return {t.deg for t in a.terms}


def pprime_degree_set(a: ZetaSeries, check_unit_core: bool = True) -> set[RatPoly]:
    """Prime-to-p parts of the degrees, taken at the polynomial level.

    Stripping the maximal power of ``q`` gives the p'-part at every prime
    power ``q`` only when the remaining core has constant term +-1, which is
    asserted unless ``check_unit_core`` is off.
    """
    cores = set()
    for d in degree_set(a):
        _, core = strip_q_power(d)
        if check_unit_core and abs(core.coeffs[0]) != 1:
            raise AssertionError(f"degree {d} has p'-core {core} with constant term != +-1")
        cores.add(core)
    return cores


def check_probe_integrality(a: ZetaSeries, probes: Iterable[int] = PROBE_QS) -> list[str]:
    """Return problems found: non-integral or negative multiplicities, non-positive degrees."""
    problems = []
    for q in probes:
        for t in a.terms:
            m, d = t.mult(q), t.deg(q)
            if m.denominator != 1 or m < 0:
                problems.append(f"{a.label} q={q}: multiplicity {t.mult} -> {m}")
            if d.denominator != 1 or d <= 0:
                problems.append(f"{a.label} q={q}: degree {t.deg} -> {d}")
    return problems

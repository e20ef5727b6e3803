"""Structural predicates and decompositions for superpolynomials.

A thin knot's triply graded data is forced by its two-variable polynomial
and one integer: plotting generators by the combined delta-grading puts
them all on one line, so the homological grading of each monomial is the
affine function of its (a, q)-exponents determined by the invariant S.
This module builds that thin polynomial, splits it into the zigzag summand
plus four-generator squares, runs the one-step and three-step pairing
decompositions driven by the two canceling differentials, and evaluates
the braid-diagram bound on a-exponents.
"""

from .laurent import (
    Poly3,
    at_a_one,
    at_t_minus_one,
    exact_divide,
    mirror,
    positivity_and_alternation,
    NotDivisible,
    OddExponent,
)
from .torus import super_t2


class StructureError(Exception):
    pass


class NotAlternating(StructureError):
    pass


class NotDecomposable(StructureError):
    pass


class NoSurvivor(StructureError):
    pass


class NegativeQuotient(StructureError):
    pass


class ThinResult:
    """Thin superpolynomial with its zigzag-plus-squares decomposition."""

    def __init__(self, superpoly, s_inv, sawtooth, squares_q):
        self.superpoly = superpoly
        self.s_inv = s_inv
        self.sawtooth = sawtooth
        self.squares_q = squares_q


SQUARE_FACTOR = (1 + Poly3.monomial(1, -2, 2, -1)) * (1 + Poly3.monomial(1, -2, -2, -3))


def sawtooth_poly(s_inv):
    """The zigzag summand with invariant S: a (2, |S|+1) torus polynomial,
    mirrored for negative S, a lone unit for S = 0."""
    if s_inv == 0:
        return Poly3.one()
    if s_inv % 2:
        raise ValueError("S must be even, got %d" % s_inv)
    base = super_t2(abs(s_inv) // 2)
    return base if s_inv > 0 else mirror(base)


def thin_super(homfly, s_inv):
    """Thin superpolynomial from a two-variable polynomial and S.

    Each term c a^i q^j (i, j even) becomes |c| a^i q^j t^(i + j/2 - S/2).
    The construction is valid only when the input alternates with the
    global sign matching S, which is checked by specializing back; the
    zigzag-plus-squares split must then come out exact and nonnegative.
    Raises NotAlternating or NotDecomposable when the knot cannot carry a
    thin structure with this S.
    """
    if s_inv % 2:
        raise ValueError("S must be even, got %d" % s_inv)
    try:
        alternating = positivity_and_alternation(homfly, "homfly-alternating")
    except OddExponent as exc:
        raise NotAlternating(str(exc))
    if not alternating:
        raise NotAlternating("coefficient signs do not alternate on the q-grid")
    terms = {}
    for (ea, eq, _), c in homfly.terms.items():
        terms[(ea, eq, ea + eq // 2 - s_inv // 2)] = abs(c)
    poly = Poly3(terms)
    if at_t_minus_one(poly) != homfly:
        raise NotAlternating(
            "global sign is inconsistent with S = %d (specialization broke)" % s_inv
        )
    remainder = poly - sawtooth_poly(s_inv)
    try:
        squares = exact_divide(remainder, SQUARE_FACTOR)
    except NotDivisible as exc:
        raise NotDecomposable("squares quotient is inexact: %s" % exc)
    if not positivity_and_alternation(squares, "nonneg"):
        raise NotDecomposable("squares quotient has a negative coefficient")
    return ThinResult(poly, s_inv, sawtooth_poly(s_inv), squares)


def _pairing(p, survivor_of_s, binomial, survivor_name):
    """Shared engine for the one-step pairings.

    Scans candidate survivor monomials in canonical order; for each, the
    remainder must be exactly divisible by the binomial with nonnegative
    quotient.  The first success wins (deterministic); if no candidate
    exists at all, NoSurvivor; otherwise the first candidate's failure is
    reported.
    """
    candidates = []
    for (ea, eq, et), c in p.sorted_terms():
        s_inv = survivor_of_s(ea, eq, et)
        if s_inv is not None and c > 0:
            candidates.append(s_inv)
    if not candidates:
        raise NoSurvivor("no monomial of the form %s is present" % survivor_name)
    first_error = None
    for s_inv in candidates:
        survivor = _survivor_monomial(s_inv, survivor_name)
        try:
            quotient = exact_divide(p - survivor, binomial)
        except NotDivisible as exc:
            if first_error is None:
                first_error = NotDivisible(
                    "remainder after %s survivor S=%d: %s" % (survivor_name, s_inv, exc)
                )
            continue
        if not positivity_and_alternation(quotient, "nonneg"):
            if first_error is None:
                first_error = NegativeQuotient(
                    "quotient for %s survivor S=%d has negative coefficients"
                    % (survivor_name, s_inv)
                )
            continue
        return s_inv, quotient
    raise first_error


def _survivor_monomial(s_inv, survivor_name):
    if survivor_name == "plus":
        return Poly3.monomial(1, s_inv, -s_inv, 0)
    return Poly3.monomial(1, s_inv, s_inv, s_inv)


def pattern_plus(p):
    """S and Q+ with p = a^S q^{-S} + (1 + t a^2 q^{-2}) Q+, Q+ >= 0."""
    return _pairing(
        p,
        lambda ea, eq, et: ea if (eq == -ea and et == 0) else None,
        1 + Poly3.monomial(1, 2, -2, 1),
        "plus",
    )


def pattern_minus(p):
    """S and Q- with p = (aqt)^S + (1 + a^2 q^2 t^3) Q-, Q- >= 0."""
    return _pairing(
        p,
        lambda ea, eq, et: ea if (eq == ea and et == ea) else None,
        1 + Poly3.monomial(1, 2, 2, 3),
        "minus",
    )


def three_step_pairing(khr2):
    """(m, n, Q-) with khr2 = q^m t^n + (1 + q^6 t^3) Q-, Q- >= 0, or None.

    khr2 must be a-free.  Candidate survivors are scanned in canonical
    monomial order; the first exact nonnegative split is returned, and
    absence of any split comes back as None rather than an error.
    """
    if any(ea != 0 for (ea, _, _) in khr2.terms):
        raise ValueError("three-step pairing applies to a-free polynomials")
    binomial = 1 + Poly3.monomial(1, 0, 6, 3)
    for (_, eq, et), c in khr2.sorted_terms():
        if c <= 0:
            continue
        survivor = Poly3.monomial(1, 0, eq, et)
        try:
            quotient = exact_divide(khr2 - survivor, binomial)
        except NotDivisible:
            continue
        if positivity_and_alternation(quotient, "nonneg"):
            return eq, et, quotient
    return None


def all_three_step_pairings(khr2):
    """Every survivor monomial admitting a three-step split, for inspection."""
    if any(ea != 0 for (ea, _, _) in khr2.terms):
        raise ValueError("three-step pairing applies to a-free polynomials")
    binomial = 1 + Poly3.monomial(1, 0, 6, 3)
    out = []
    for (_, eq, et), c in khr2.sorted_terms():
        if c <= 0:
            continue
        try:
            quotient = exact_divide(khr2 - Poly3.monomial(1, 0, eq, et), binomial)
        except NotDivisible:
            continue
        if positivity_and_alternation(quotient, "nonneg"):
            out.append((eq, et, quotient))
    return out


def thin_quotient_test(homfly, s_inv):
    """Does (P - P_zigzag) admit an alternating quotient by the square norms?

    Tries both sign placements of the degree-two factor, (1 - a^2 q^{+-2})
    and (1 - a^{-2} q^{+-2}); true iff either divides exactly and the
    quotient is zero or alternating.  Returns (ok, which) where which names
    the convention that succeeded ('positive', 'negative', or None).
    """
    if s_inv % 2:
        raise ValueError("S must be even, got %d" % s_inv)
    target = homfly - at_t_minus_one(sawtooth_poly(s_inv))
    outcomes = {}
    for name, exp in (("positive", 2), ("negative", -2)):
        divisor = (1 - Poly3.monomial(1, exp, 2, 0)) * (1 - Poly3.monomial(1, exp, -2, 0))
        try:
            quotient = exact_divide(target, divisor)
        except NotDivisible:
            outcomes[name] = False
            continue
        if not quotient:
            outcomes[name] = True
            continue
        try:
            outcomes[name] = positivity_and_alternation(quotient, "homfly-alternating")
        except OddExponent:
            outcomes[name] = False
    which = None
    for name in ("negative", "positive"):
        if outcomes[name]:
            which = name
            break
    return (which is not None), which


def morton_check(p, writhe, components):
    """Braid bound: w - c + 1 <= every a-exponent of p <= w + c - 1."""
    if not p.terms:
        raise ValueError("the zero polynomial has no a-exponent range")
    lo, hi = p.exponent_range("a")
    return writhe - components + 1 <= lo and hi <= writhe + components - 1


def derived_invariants(p):
    """(g_h, alexander, delta_spectrum) read off a superpolynomial.

    g_h is half the top q-exponent (raises OddExponent when that is odd);
    the Alexander polynomial is the t = -1, then a = 1 specialization; the
    spectrum is the histogram of doubled delta-gradings.
    """
    rng = p.exponent_range("q")
    if rng is None:
        raise ValueError("the zero polynomial has no invariants")
    if rng[1] % 2:
        raise OddExponent("top q-exponent %d is odd" % rng[1])
    g_h = rng[1] // 2
    alexander = at_a_one(at_t_minus_one(p))
    spectrum = {}
    for (ea, eq, et), c in p.terms.items():
        d2 = 2 * et - 2 * ea - eq
        spectrum[d2] = spectrum.get(d2, 0) + abs(c)
    return g_h, alexander, spectrum

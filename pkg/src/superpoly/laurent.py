"""Exact sparse Laurent polynomials in the three variables a, q, t.

Every invariant in this library (HOMFLY polynomials, superpolynomials,
Poincare polynomials of graded homologies) is a finite integer combination
of monomials a^i q^j t^k with i, j, k in Z.  Poly3 stores such a polynomial
as a dict mapping exponent triples to nonzero integer coefficients, and all
arithmetic is exact: Python ints never overflow and nothing is ever rounded.

Instances are immutable after construction; every operation returns a new
polynomial, so values can be shared freely across threads.
"""


class LaurentError(Exception):
    """Base class for errors raised by this module."""


class NotDivisible(LaurentError):
    """Exact division failed: the dividend is not a multiple of the divisor.

    This usually signals a failed structural check (an identity that was
    expected to hold does not), not a programming error, so callers often
    catch it and report the violated identity.
    """


class NotYExpressible(LaurentError):
    """The polynomial is not in the span of a^i t^j y^g monomials."""


class OddExponent(LaurentError):
    """An odd a- or q-exponent appeared where only even ones are allowed."""


class ParseError(LaurentError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


class Poly3:
    """A Laurent polynomial in Z[a^{+-1}, q^{+-1}, t^{+-1}].

    The zero polynomial has an empty term dict.  Exponent triples are
    (ea, eq, et) in that order everywhere, and the same lexicographic
    order on triples is the canonical term order used for printing.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    ea, eq, et = key
                    clean[(int(ea), int(eq), int(et))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly3 is immutable")

    @staticmethod
    def zero():
        return Poly3()

    @staticmethod
    def one():
        return Poly3({(0, 0, 0): 1})

    @staticmethod
    def monomial(coeff, ea=0, eq=0, et=0):
        return Poly3({(ea, eq, et): coeff})

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly3.monomial(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Poly3(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly3({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly3.monomial(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Poly3.monomial(other)
        out = {}
        for (a1, q1, t1), c1 in self.terms.items():
            for (a2, q2, t2), c2 in other.terms.items():
                key = (a1 + a2, q1 + q2, t1 + t2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Poly3(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers need an explicit inverse monomial")
        result = Poly3.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly3.monomial(other)
        return isinstance(other, Poly3) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "Poly3(%s)" % format_poly(self)

    def __str__(self):
        return format_poly(self)

    # -- interrogation ----------------------------------------------------

    def coeff(self, ea, eq, et):
        return self.terms.get((ea, eq, et), 0)

    def sorted_terms(self):
        """Terms in canonical (ea, eq, et) order."""
        return sorted(self.terms.items())

    def dimension(self):
        """Sum of absolute coefficients (total rank when self is a Poincare polynomial)."""
        return sum(abs(c) for c in self.terms.values())

    def exponent_range(self, axis):
        """(min, max) exponent on one of the axes 'a', 'q', 't'; None for 0."""
        if not self.terms:
            return None
        i = {"a": 0, "q": 1, "t": 2}[axis]
        exps = [key[i] for key in self.terms]
        return min(exps), max(exps)

    def is_nonnegative(self):
        return all(c > 0 for c in self.terms.values())

    def scale_monomial(self, coeff, ea=0, eq=0, et=0):
        """Multiply by coeff * a^ea q^eq t^et without building a Poly3 factor."""
        return Poly3(
            {(a + ea, q + eq, t + et): c * coeff for (a, q, t), c in self.terms.items()}
        )


def _as_signed_monomial(sub):
    """Normalize a substitution target to (sign, ea, eq, et).

    Accepts None / 1 (identity on that variable), an integer +-1, or a
    single-term Poly3 with coefficient +-1.
    """
    if sub is None:
        return None
    if isinstance(sub, int):
        if sub in (1, -1):
            return (sub, 0, 0, 0)
        raise ValueError("substitution constant must be +-1, got %r" % (sub,))
    if isinstance(sub, Poly3):
        if len(sub.terms) != 1:
            raise ValueError("substitution target must be a single signed monomial")
        (key, c), = sub.terms.items()
        if c not in (1, -1):
            raise ValueError("substitution coefficient must be +-1, got %r" % (c,))
        return (c, key[0], key[1], key[2])
    raise TypeError("cannot interpret %r as a signed monomial" % (sub,))


def monomial_substitute(p, sub_a=None, sub_q=None, sub_t=None):
    """Substitute signed monomials for the variables of p, exactly.

    Each of sub_a, sub_q, sub_t is either None (leave the variable alone),
    +-1, or a one-term Poly3 with coefficient +-1.  This covers every
    specialization the library needs: a = q^N, t = -1, a = 1, a = t^{-1},
    q -> q^{-1}, and the full mirror (a,q,t) -> (a^{-1},q^{-1},t^{-1}).
    """
    ma = _as_signed_monomial(sub_a) or (1, 1, 0, 0)
    mq = _as_signed_monomial(sub_q) or (1, 0, 1, 0)
    mt = _as_signed_monomial(sub_t) or (1, 0, 0, 1)
    out = {}
    for (ea, eq, et), c in p.terms.items():
        sign = 1
        if ma[0] < 0 and ea % 2:
            sign = -sign
        if mq[0] < 0 and eq % 2:
            sign = -sign
        if mt[0] < 0 and et % 2:
            sign = -sign
        key = (
            ea * ma[1] + eq * mq[1] + et * mt[1],
            ea * ma[2] + eq * mq[2] + et * mt[2],
            ea * ma[3] + eq * mq[3] + et * mt[3],
        )
        s = out.get(key, 0) + sign * c
        if s:
            out[key] = s
        else:
            del out[key]
    return Poly3(out)


# Frequently used specializations.

def at_t_minus_one(p):
    """t = -1; sends a Poincare polynomial to its Euler characteristic."""
    return monomial_substitute(p, sub_t=-1)


def at_a_qN(p, n):
    """a = q^N (the sl(N) specialization)."""
    return monomial_substitute(p, sub_a=Poly3.monomial(1, 0, n, 0))


def at_a_one(p):
    return monomial_substitute(p, sub_a=1)


def at_a_inv_t(p):
    """a = t^{-1} (the regrading that exposes the Alexander-side gradings)."""
    return monomial_substitute(p, sub_a=Poly3.monomial(1, 0, 0, -1))


def mirror(p):
    """(a, q, t) -> (a^{-1}, q^{-1}, t^{-1}); mirror image of the knot."""
    return Poly3({(-a, -q, -t): c for (a, q, t), c in p.terms.items()})


def q_inverse(p):
    return monomial_substitute(p, sub_q=Poly3.monomial(1, 0, -1, 0))


# -- exact division -------------------------------------------------------

def exact_divide(p, d):
    """Return r with r * d == p exactly, else raise NotDivisible.

    Term-driven elimination: the divisor's lexicographically greatest term
    is used as the leading term, and the top remaining term of the remainder
    is cancelled at each step.  For an exact quotient, the extreme monomials
    of a product cannot cancel, so the quotient's support is confined to the
    coordinatewise box [min(p)-min(d), max(p)-max(d)]; any candidate term
    escaping the box proves non-divisibility, which also bounds the loop.
    """
    if not d.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p.terms:
        return Poly3.zero()
    d_lead = max(d.terms)
    d_lead_c = d.terms[d_lead]
    p_keys = list(p.terms)
    d_keys = list(d.terms)
    box_lo = tuple(
        min(k[i] for k in p_keys) - min(k[i] for k in d_keys) for i in range(3)
    )
    box_hi = tuple(
        max(k[i] for k in p_keys) - max(k[i] for k in d_keys) for i in range(3)
    )
    rem = dict(p.terms)
    quo = {}
    while rem:
        r_lead = max(rem)
        c = rem[r_lead]
        if c % d_lead_c:
            raise NotDivisible("leading coefficient %d not divisible by %d" % (c, d_lead_c))
        key = tuple(r_lead[i] - d_lead[i] for i in range(3))
        if any(key[i] < box_lo[i] or key[i] > box_hi[i] for i in range(3)):
            raise NotDivisible("no exact quotient (support escaped the feasible box)")
        cq = c // d_lead_c
        quo[key] = cq
        for dk, dc in d.terms.items():
            k2 = (key[0] + dk[0], key[1] + dk[1], key[2] + dk[2])
            s = rem.get(k2, 0) - cq * dc
            if s:
                rem[k2] = s
            else:
                rem.pop(k2, None)
    return Poly3(quo)


def divides(d, p):
    """True iff d divides p exactly."""
    try:
        exact_divide(p, d)
        return True
    except NotDivisible:
        return False


# -- genus expansion ------------------------------------------------------

Y_POLY = Poly3({(0, 2, 1): 1, (0, 0, 0): 2, (0, -2, -1): 1})


class YExpansion:
    """A polynomial rewritten in the basis a^Q t^i y^g, y = q^2 t + 2 + q^{-2} t^{-1}.

    coeffs maps (ea, et, g) with g >= 0 to a nonzero integer.  Expanding
    every basis monomial back into (a, q, t) reproduces the source
    polynomial exactly; see to_poly().
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = {k: c for k, c in coeffs.items() if c}

    @property
    def g_max(self):
        """The holomorphic genus: the largest y-power in the expansion."""
        return max((g for (_, _, g) in self.coeffs), default=0)

    def to_poly(self):
        out = Poly3.zero()
        y_powers = {0: Poly3.one()}
        for (ea, et, g), c in sorted(self.coeffs.items()):
            while g not in y_powers:
                gm = max(y_powers)
                y_powers[gm + 1] = y_powers[gm] * Y_POLY
            out = out + y_powers[g].scale_monomial(c, ea=ea, et=et)
        return out


def y_rewrite(p):
    """Rewrite p as sum c * a^Q t^i y^g, or raise NotYExpressible.

    Works down from the largest |q|-exponent 2g: a term a^Q q^{2g} t^k can
    only come from a^Q t^{k-g} y^g, which also contributes the mirror term
    a^Q q^{-2g} t^{k-2g}; if the mirror coefficient disagrees the expansion
    cannot exist.  Eliminating the whole top level at once leaves only
    strictly smaller |q|-exponents, so the loop terminates.

    Success is exactly the q <-> q^{-1} symmetry of the input holding at the
    level of coefficients, so failure here flags a broken symmetry, not a bug.
    """
    rem = dict(p.terms)
    coeffs = {}
    while rem:
        top = max(abs(q) for (_, q, _) in rem)
        if top == 0:
            for (ea, _, et), c in rem.items():
                coeffs[(ea, et, 0)] = coeffs.get((ea, et, 0), 0) + c
            break
        if top % 2:
            raise NotYExpressible("odd q-exponent %d cannot come from a power of y" % top)
        g = top // 2
        level = [(key, c) for key, c in rem.items() if key[1] == top]
        if not level:
            # Everything at the extreme degree sits on the negative side,
            # so no y-power can produce it.
            raise NotYExpressible(
                "terms at q^%d have no positive-side partner" % (-top)
            )
        for (ea, _, et), c in level:
            mirror_key = (ea, -top, et - top)
            if rem.get(mirror_key, 0) != c:
                raise NotYExpressible(
                    "coefficient at a^%d q^%d t^%d has no matching mirror partner"
                    % (ea, top, et)
                )
            coeffs[(ea, et - g, g)] = coeffs.get((ea, et - g, g), 0) + c
            for (_, dq, dt), yc in (Y_POLY ** g).terms.items():
                key = (ea, dq, (et - g) + dt)
                s = rem.get(key, 0) - c * yc
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
    return YExpansion(coeffs)


# -- positivity and alternation checks ------------------------------------

def positivity_and_alternation(p, mode):
    """Coefficient sign tests.

    mode 'nonneg': every coefficient is >= 0.
    mode 'homfly-alternating': p is a two-variable HOMFLY polynomial
    (et identically 0; enforced as a precondition) and there is one global
    sign eps with sign(coeff of a^{2i} q^{2j}) = eps * (-1)^j for every
    nonzero term.  Odd a- or q-exponents raise OddExponent.
    """
    if mode == "nonneg":
        return p.is_nonnegative()
    if mode != "homfly-alternating":
        raise ValueError("unknown mode %r" % (mode,))
    if any(et != 0 for (_, _, et) in p.terms):
        raise ValueError("homfly-alternating mode needs a t-free polynomial")
    eps = 0
    for (ea, eq, _), c in sorted(p.terms.items()):
        if ea % 2 or eq % 2:
            raise OddExponent("term a^%d q^%d has an odd exponent" % (ea, eq))
        sign = 1 if c > 0 else -1
        expected_wo_eps = (-1) ** (eq // 2)
        if eps == 0:
            eps = sign * expected_wo_eps
        elif sign != eps * expected_wo_eps:
            return False
    return True


# -- text round-trip ------------------------------------------------------

_VARIABLE_AXIS = {"a": 0, "q": 1, "t": 2}


def format_poly(p):
    """Canonical text: terms sorted by (ea, eq, et), everything explicit.

    Example: 1*a^2*q^-2*t^0 + 1*a^2*q^2*t^2 + 1*a^4*q^0*t^3.  The output
    always re-parses to the same polynomial.
    """
    if not p.terms:
        return "0"
    pieces = []
    for (ea, eq, et), c in p.sorted_terms():
        body = "%d*a^%d*q^%d*t^%d" % (abs(c), ea, eq, et)
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def parse_poly(text):
    """Parse polynomial text; inverse of format_poly on canonical output.

    Grammar: poly := ['-'] term (('+'|'-') term)*;
    term := [integer] ('*'? factor)*; factor := ('a'|'q'|'t') ['^' integer].
    Whitespace is ignored, an omitted exponent means 1, an omitted
    coefficient means 1 (with the sign coming from the separator).
    """
    i = 0
    n = len(text)
    terms = {}

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int(allow_sign):
        nonlocal i
        start = i
        if allow_sign and i < n and text[i] in "+-":
            i += 1
        if i >= n or not text[i].isdigit():
            raise ParseError("expected an integer", start)
        while i < n and text[i].isdigit():
            i += 1
        return int(text[start:i])

    skip_ws()
    if i >= n:
        raise ParseError("empty input", 0)
    sign = 1
    if text[i] == "-":
        sign = -1
        i += 1
    first = True
    while True:
        skip_ws()
        if not first:
            if i >= n:
                break
            if text[i] == "+":
                sign = 1
            elif text[i] == "-":
                sign = -1
            else:
                raise ParseError("expected '+' or '-' between terms", i)
            i += 1
            skip_ws()
        first = False
        coeff = None
        if i < n and text[i].isdigit():
            coeff = read_int(False)
        exps = [0, 0, 0]
        saw_factor = False
        while True:
            skip_ws()
            if i < n and text[i] == "*":
                i += 1
                skip_ws()
            if i < n and text[i] in _VARIABLE_AXIS:
                axis = _VARIABLE_AXIS[text[i]]
                i += 1
                e = 1
                if i < n and text[i] == "^":
                    i += 1
                    e = read_int(True)
                exps[axis] += e
                saw_factor = True
            else:
                break
        if coeff is None:
            if not saw_factor:
                raise ParseError("expected a term", i)
            coeff = 1
        key = (exps[0], exps[1], exps[2])
        s = terms.get(key, 0) + sign * coeff
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)
        skip_ws()
        if i >= n:
            break
    if i < n:
        raise ParseError("trailing garbage", i)
    return Poly3(terms)

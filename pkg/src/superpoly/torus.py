"""Closed-form torus knot invariants.

The torus knot T(n, m) here is the standard negatively-crossed one (the
trefoil of the usual tables is T(2, 3)), so its HOMFLY polynomial carries
positive a-exponents and S(T(n, m)) = (n-1)(m-1).  Positive torus knots are
obtained by mirroring, i.e. laurent.mirror.

Two independent HOMFLY routes are provided: the classical sum over quantum
factorials and a product form obtained by clearing denominators.  They are
computed by entirely different divisions, so their agreement is a strong
cross-check and is asserted wholesale in the test suite.
"""

from math import gcd

from .laurent import (
    Poly3,
    exact_divide,
    monomial_substitute,
)


class NegativeCoefficient(Exception):
    """A combined closed form failed to be coefficient-nonnegative."""


def torus_id(n, m):
    """Validate (n, m) for a torus knot; returns the pair."""
    n, m = int(n), int(m)
    if n < 2 or m <= n:
        raise ValueError("need 2 <= n < m, got (%d, %d)" % (n, m))
    if gcd(n, m) != 1:
        raise ValueError("(%d, %d) is a link, not a knot" % (n, m))
    return n, m


def torus_s_invariant(n, m):
    return (n - 1) * (m - 1)


def _qint(k):
    """[k] = q^k - q^{-k}."""
    return Poly3({(0, k, 0): 1, (0, -k, 0): -1})


def _qfactorial(k):
    out = Poly3.one()
    for i in range(1, k + 1):
        out = out * _qint(i)
    return out


def _homfly_jones(n, m):
    # Sum over beta with the quantum binomial [n-1]!/([b]![n-1-b]!) folded in
    # so that each summand is already a polynomial; the single final division
    # by [n] * [n-1]! is checked-exact.
    fact = _qfactorial(n - 1)
    total = Poly3.zero()
    for b in range(n):
        binom = exact_divide(fact, _qfactorial(b) * _qfactorial(n - 1 - b))
        term = binom.scale_monomial((-1) ** (n - 1 - b), eq=-m * (2 * b - n + 1))
        for j in range(b - n + 1, b + 1):
            if j == 0:
                continue
            term = term * Poly3({(1, j, 0): 1, (-1, -j, 0): -1})
        total = total + term
    total = total.scale_monomial(1, ea=m * (n - 1)) * _qint(1)
    return exact_divide(total, _qint(n) * fact)


def _homfly_product(n, m):
    # Sum over beta of q^{-2mb} prod (a^2 q^{2i} - 1)/(q^{2i} - 1)
    # * prod (a^2 - q^{2j})/(1 - q^{2j}), put over the common denominator
    # prod_{i<n} (q^{2i} - 1); each cofactor division is a Gaussian-binomial
    # identity and therefore exact.
    def qe(i, c=1):
        return Poly3.monomial(c, 0, i, 0)

    common = Poly3.one()
    for i in range(1, n):
        common = common * (qe(2 * i) - 1)
    total = Poly3.zero()
    for b in range(n):
        den = Poly3.one()
        for i in range(1, b + 1):
            den = den * (qe(2 * i) - 1)
        for j in range(1, n - b):
            den = den * (1 - qe(2 * j))
        num = qe(-2 * m * b)
        for i in range(1, b + 1):
            num = num * (Poly3.monomial(1, 2, 2 * i, 0) - 1)
        for j in range(1, n - b):
            num = num * (Poly3.monomial(1, 2, 0, 0) - qe(2 * j))
        total = total + num * exact_divide(common, den)
    total = total * (1 - qe(-2))
    total = total.scale_monomial(1, ea=(n - 1) * (m - 1), eq=(n - 1) * (m - 1))
    return exact_divide(total, (1 - qe(-2 * n)) * common)


def homfly_torus(n, m, form="product"):
    """Normalized HOMFLY polynomial of T(n, m).

    form 'jones' evaluates the quantum-factorial sum; form 'product' clears
    denominators in the equivalent product expression.  Both are exact; a
    failed intermediate division would raise NotDivisible, which for valid
    (n, m) would indicate an implementation bug and is never swallowed.
    """
    n, m = torus_id(n, m)
    if form == "jones":
        return _homfly_jones(n, m)
    if form == "product":
        return _homfly_product(n, m)
    raise ValueError("form must be 'jones' or 'product', got %r" % (form,))


# -- superpolynomials for the (2, m) and (3, m) families -------------------

def super_t2(k):
    """Reduced superpolynomial of T(2, 2k+1).

    a^{2k} sum_{i=0..k} q^{4i-2k} t^{2i}
    + a^{2k+2} sum_{i=1..k} q^{4i-2k-2} t^{2i+1}.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    terms = {}
    for i in range(k + 1):
        terms[(2 * k, 4 * i - 2 * k, 2 * i)] = 1
    for i in range(1, k + 1):
        terms[(2 * k + 2, 4 * i - 2 * k - 2, 2 * i + 1)] = 1
    return Poly3(terms)


def _t3_families(m):
    """Index data for the three a-levels of the T(3, m) superpolynomial.

    Returns (k, level0, level1, level2) where each level is a list of
    (key, (ea, eq, et)) pairs; key identifies the summation indices so that
    repeated monomials stay distinguishable.  level1 keys carry an 'even' or
    'odd' flag splitting the inner sum by the parity of its index, which is
    the split along which the differentials act.
    """
    if m < 4 or m % 3 == 0:
        raise ValueError("need m >= 4 coprime to 3, got %d" % m)
    k, r = divmod(m, 3)
    lv0, lv1, lv2 = [], [], []
    if r == 1:
        for j in range(k + 1):
            for i in range(3 * j + 1):
                lv0.append(((j, i), (6 * k, 6 * j - 4 * i, 4 * k + 2 * j - 2 * i)))
        for j in range(1, k + 1):
            for i in range(6 * j - 1):
                et = 4 * k + 2 * j - 2 * (i // 2) + 1
                parity = "even" if i % 2 == 0 else "odd"
                lv1.append(((parity, j, i // 2), (6 * k + 2, 6 * j - 2 * i - 2, et)))
        for j in range(k):
            for i in range(3 * j + 1):
                lv2.append(((j, i), (6 * k + 4, 6 * j - 4 * i, 4 * k + 2 * j - 2 * i + 4)))
    else:
        for j in range(k + 1):
            for i in range(3 * j + 2):
                lv0.append(((j, i), (6 * k + 2, 6 * j - 4 * i + 2, 4 * k + 2 * j - 2 * i + 2)))
        for j in range(k + 1):
            for i in range(6 * j + 1):
                et = 4 * k + 2 * j - 2 * (i // 2) + 3
                parity = "even" if i % 2 == 0 else "odd"
                lv1.append(((parity, j, i // 2), (6 * k + 4, 6 * j - 2 * i, et)))
        for j in range(k):
            for i in range(3 * j + 2):
                lv2.append(((j, i), (6 * k + 6, 6 * j - 4 * i + 2, 4 * k + 2 * j - 2 * i + 6)))
    return k, lv0, lv1, lv2


def super_t3(m):
    """Reduced superpolynomial of T(3, m), m coprime to 3."""
    _, lv0, lv1, lv2 = _t3_families(m)
    terms = {}
    for _, g in lv0 + lv1 + lv2:
        terms[g] = terms.get(g, 0) + 1
    return Poly3(terms)


def t3_killed_sources(m):
    """The T(3, m) generators cancelled by the sl(2) reduction.

    Returns a list of (family_key, grading) pairs: the odd-index part of the
    middle a-level together with the whole top a-level.  These same
    generators are also the sources for the Alexander-side reduction.
    """
    _, _, lv1, lv2 = _t3_families(m)
    killed = [(key, g) for key, g in lv1 if key[0] == "odd"]
    killed += [(("top", j, i), g) for (j, i), g in lv2]
    return killed


def t3_reduction_terms(m, n_diff):
    """(killed, surviving_images) for the differential d_N, N in {2, 0}.

    killed collects the cancelled source monomials of the T(3, m)
    superpolynomial; surviving_images their images, obtained by applying the
    degree of d_2, namely (-2, 4, -1), or of d_0, namely (-2, 0, -3).
    Subtracting both from the superpolynomial and specializing (a = q^2 for
    N = 2, a = t^{-1} for N = 0) gives the reduced Poincare polynomial.
    """
    if n_diff not in (2, 0):
        raise ValueError("only the N = 2 and N = 0 reductions are specified")
    shift = (-2, 4, -1) if n_diff == 2 else (-2, 0, -3)
    killed_terms = {}
    image_terms = {}
    for _, (ea, eq, et) in t3_killed_sources(m):
        killed_terms[(ea, eq, et)] = killed_terms.get((ea, eq, et), 0) + 1
        img = (ea + shift[0], eq + shift[1], et + shift[2])
        image_terms[img] = image_terms.get(img, 0) + 1
    return Poly3(killed_terms), Poly3(image_terms)


def khr2_t3_closed(m):
    """Closed form for the reduced sl(2) Poincare polynomial of T(3, m).

    (1 + q^4 t^2 + q^6 t^3 + q^10 t^5) * a geometric block sum, plus a lone
    top term for m = 3k+1 and minus a cancelling corner term for m = 3k+2.
    The subtraction must cancel inside the sum; a negative coefficient in
    the combined result flags a transcription error and raises.
    """
    if m < 4 or m % 3 == 0:
        raise ValueError("need m >= 4 coprime to 3")
    k, r = divmod(m, 3)
    block = Poly3({(0, 0, 0): 1, (0, 4, 2): 1, (0, 6, 3): 1, (0, 10, 5): 1})
    if r == 1:
        s = Poly3({(0, 6 * k + 6 * i, 4 * i): 1 for i in range(k)})
        out = block * s + Poly3.monomial(1, 0, 12 * k, 4 * k)
    else:
        s = Poly3({(0, 6 * k + 2 + 6 * i, 4 * i): 1 for i in range(k + 1)})
        out = block * s - Poly3.monomial(1, 0, 12 * (k + 1), 4 * k + 5)
    if not out.is_nonnegative():
        raise NegativeCoefficient("sl(2) closed form for T(3,%d) went negative" % m)
    return out


def cp0_t3_closed(m):
    """Closed form for the Alexander-side Poincare polynomial of T(3, m)."""
    if m < 4 or m % 3 == 0:
        raise ValueError("need m >= 4 coprime to 3")
    k, r = divmod(m, 3)
    if r == 1:
        terms = {(0, 0, -2 * k): 1}
        for i in range(1, k + 1):
            for (eq, et) in (
                (6 * i, 2 * i),
                (6 * i - 2, 2 * i - 1),
                (-6 * i + 2, -4 * i + 1),
                (-6 * i, -4 * i),
            ):
                terms[(0, eq, et - 2 * k)] = terms.get((0, eq, et - 2 * k), 0) + 1
    else:
        terms = {}
        for (eq, et) in ((2, 1), (0, 0), (-2, -1)):
            terms[(0, eq, et - 2 * k - 1)] = 1
        for i in range(1, k + 1):
            for (eq, et) in (
                (6 * i + 2, 2 * i + 1),
                (6 * i, 2 * i),
                (-6 * i, -4 * i),
                (-6 * i - 2, -4 * i - 1),
            ):
                terms[(0, eq, et - 2 * k - 1)] = terms.get((0, eq, et - 2 * k - 1), 0) + 1
    return Poly3(terms)


def hfk_t2(k):
    """Closed form for the Alexander-side Poincare polynomial of T(2, 2k+1).

    q^{-2k} t^{-2k} (1 + (1 + q^{-2} t^{-1}) sum_{i=1..k} q^{4i} t^{2i}).
    """
    if k < 1:
        raise ValueError("need k >= 1")
    s = Poly3({(0, 4 * i, 2 * i): 1 for i in range(1, k + 1)})
    body = 1 + (1 + Poly3.monomial(1, 0, -2, -1)) * s
    return body.scale_monomial(1, eq=-2 * k, et=-2 * k)


# -- reduced <-> unreduced ------------------------------------------------

def unreduce(cp, s_inv):
    """Unreduced superpolynomial from a reduced one with invariant S.

    (a - a^{-1}) (a/q)^S + (q^{-1} + a^2 q^{-1} t)(a q^{-1} - a^{-1} q) Q+,
    where Q+ is the positive remainder of the one-step pairing; the pairing
    failure (DecompositionFailed via pattern_plus) propagates.
    """
    from .structchecks import pattern_plus

    s_found, q_plus = pattern_plus(cp)
    if s_found != s_inv:
        raise ValueError(
            "pairing survivor sits at S = %d, not the requested %d" % (s_found, s_inv)
        )
    a_minus = Poly3({(1, 0, 0): 1, (-1, 0, 0): -1})
    lead = a_minus.scale_monomial(1, ea=s_inv, eq=-s_inv)
    bracket = Poly3({(0, -1, 0): 1, (2, -1, 1): 1})
    hook = Poly3({(1, -1, 0): 1, (-1, 1, 0): -1})
    return lead + bracket * hook * q_plus


def khrN_unreduced_prediction(pbar, n_level):
    """Unreduced sl(N) Poincare prediction: pbar(a = q^N) / (q - q^{-1}).

    NotDivisible here means pbar is not a valid unreduced superpolynomial at
    this level, so the error is allowed to surface.
    """
    if n_level < 1:
        raise ValueError("need N >= 1")
    specialized = monomial_substitute(pbar, sub_a=Poly3.monomial(1, 0, n_level, 0))
    return exact_divide(specialized, Poly3({(0, 1, 0): 1, (0, -1, 0): -1}))


# -- partial beta-term series for general (n, m) ---------------------------

def stable_beta_terms(n, which, depth):
    """Truncated series for the extreme beta-contributions to T(n, m).

    which 'first' expands prod_j (1 + a^2 q^{-2j} t) / (1 - t^{-2j} q^{-2(j+1)}),
    which 'last' the partner prod_j (a^2 + q^{-2j} t^{-(2j+1)}) over the same
    denominators, each denominator as a geometric series in negative powers
    of q.  Terms with q-exponent below -depth are dropped.

    The j = 1 factors match the two bracket terms of the (2, m) series
    expansion exactly; for j >= 2 the factor exponents grow with j so that
    the expansion reproduces the q/t-grading lattice of the middle and
    extreme a-levels of the (3, m) family.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if which not in ("first", "last"):
        raise ValueError("which must be 'first' or 'last'")

    def truncate(p):
        return Poly3({k: c for k, c in p.terms.items() if k[1] >= -depth})

    out = Poly3.one()
    for j in range(1, n):
        if which == "first":
            numerator = 1 + Poly3.monomial(1, 2, -2 * j, 1)
        else:
            numerator = Poly3.monomial(1, 2, 0, 0) + Poly3.monomial(1, 0, -2 * j, -(2 * j + 1))
        ratio = Poly3.monomial(1, 0, -2 * (j + 1), -2 * j)
        geom = Poly3.one()
        power = Poly3.one()
        while True:
            power = truncate(power * ratio)
            if not power:
                break
            geom = geom + power
        out = truncate(truncate(out * numerator) * geom)
    return out


def t2_series_assembly(m, depth):
    """The full two-bracket series form of the T(2, m) superpolynomial.

    (-aqt)^{m-1} (1 - q^{-2} t^{-2})/(1 - q^{-4} t^{-2}) [ B0 + q^{-2m}
    (-t)^{2-m} B1 ] with B0, B1 the bracket series; all denominators are
    expanded to the given q-depth.  For depth comfortably beyond 2m the
    tails telescope away and the result is exactly super_t2((m-1)/2).
    """
    if m < 3 or m % 2 == 0:
        raise ValueError("need odd m >= 3")

    def truncate(p):
        return Poly3({k: c for k, c in p.terms.items() if k[1] >= -depth})

    def geom(ratio):
        total = Poly3.one()
        power = Poly3.one()
        while True:
            power = truncate(power * ratio)
            if not power:
                break
            total = total + power
        return total

    inv_q2t2 = geom(Poly3.monomial(1, 0, -2, -2))   # 1/(1 - q^{-2} t^{-2})
    inv_q4t2 = geom(Poly3.monomial(1, 0, -4, -2))   # 1/(1 - q^{-4} t^{-2})
    b0 = truncate((1 + Poly3.monomial(1, 2, -2, 1)) * inv_q2t2)
    b1 = truncate(
        (Poly3.monomial(1, 2, 0, 0) + Poly3.monomial(1, 0, -2, -3)) * inv_q2t2
    )
    sign = (-1) ** (2 - m)
    shifted = b1.scale_monomial(sign, eq=-2 * m, et=2 - m)
    body = truncate(truncate(b0 + shifted) * (1 - Poly3.monomial(1, 0, -2, -2)))
    body = truncate(body * inv_q4t2)
    assembled = body.scale_monomial((-1) ** (m - 1), ea=m - 1, eq=m - 1, et=m - 1)
    return assembled

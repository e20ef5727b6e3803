"""Triply graded complexes with the anticommuting differential family.

A DotComplex is a finite list of generators, each carrying an (ea, eq, et)
grading triple, together with sparse rational matrices d_N indexed by an
integer level N.  The admissible degree of d_N is

    N > 0:  (-2, 2N, -1)
    N = 0:  (-2, 0, -3)
    N < 0:  (-2, 2N, -1 + 2N)

and the whole family must pairwise anticommute (so in particular each d_N
squares to zero).  Homology with respect to d_N, taken per amalgamated
bigrade, produces the doubly graded reductions; the N = 1 differential is
canceling and the grading of its unique survivor is the S-invariant.

All linear algebra is exact over the rationals.
"""

from fractions import Fraction

from .laurent import Poly3, y_rewrite, NotYExpressible


class ComplexError(Exception):
    pass


class GradingMismatch(ComplexError):
    pass


class NotCanceling(ComplexError):
    pass


class SurvivorOffLine(ComplexError):
    pass


class ComplexParseError(ComplexError):
    def __init__(self, message, line):
        super().__init__("%s (line %d)" % (message, line))
        self.line = line


def diff_degree(n):
    """Required grading shift of d_N."""
    if n > 0:
        return (-2, 2 * n, -1)
    if n == 0:
        return (-2, 0, -3)
    return (-2, 2 * n, -1 + 2 * n)


class DotComplex:
    """Generators plus the sparse differential family.

    generators: list of (ea, eq, et) triples (repeats allowed).
    diffs: dict N -> list of (src_index, dst_index, Fraction coefficient).
    Immutable by convention: nothing in this module mutates a built complex.
    """

    def __init__(self, generators, diffs=None, label=None):
        self.generators = [tuple(int(x) for x in g) for g in generators]
        self.diffs = {}
        if diffs:
            for n, entries in diffs.items():
                seen = set()
                cleaned = []
                for (src, dst, coeff) in entries:
                    coeff = Fraction(coeff)
                    if coeff == 0:
                        continue
                    if not (0 <= src < len(self.generators)):
                        raise ComplexError("source index %d out of range" % src)
                    if not (0 <= dst < len(self.generators)):
                        raise ComplexError("target index %d out of range" % dst)
                    if (src, dst) in seen:
                        raise ComplexError(
                            "duplicate entry (%d, %d) in d_%d" % (src, dst, n)
                        )
                    seen.add((src, dst))
                    cleaned.append((src, dst, coeff))
                if cleaned:
                    self.diffs[int(n)] = sorted(cleaned)
        self.label = label

    def __len__(self):
        return len(self.generators)

    def poincare(self):
        terms = {}
        for g in self.generators:
            terms[g] = terms.get(g, 0) + 1
        return Poly3(terms)

    def delta_histogram(self):
        """Histogram of doubled delta-gradings 2*(et - ea) - eq."""
        hist = {}
        for (ea, eq, et) in self.generators:
            d2 = 2 * et - 2 * ea - eq
            hist[d2] = hist.get(d2, 0) + 1
        return hist

    def is_thin(self):
        return len(self.delta_histogram()) <= 1

    def matrix(self, n):
        """d_N as {(src, dst): coeff}; empty when the level is absent."""
        return {(s, d): c for (s, d, c) in self.diffs.get(n, [])}


def mirror_complex(c, label=None):
    """The complex of the mirror knot: dualize.

    Gradings are negated and every arrow is transposed (src and dst swap),
    which keeps each d_N at its own level with its own degree: the shift of
    a reversed arrow between negated endpoints equals the original shift.
    """
    gens = [(-ea, -eq, -et) for (ea, eq, et) in c.generators]
    diffs = {}
    for n, entries in c.diffs.items():
        diffs[n] = [(d, s, coeff) for (s, d, coeff) in entries]
    return DotComplex(gens, diffs, label=label)


# -- verification -----------------------------------------------------------

def _compose(entries_outer, entries_inner):
    """Sparse product: apply inner first, then outer; {(src,dst): coeff}."""
    by_src = {}
    for (s, d, c) in entries_outer:
        by_src.setdefault(s, []).append((d, c))
    out = {}
    for (s, d, c) in entries_inner:
        for (d2, c2) in by_src.get(d, []):
            key = (s, d2)
            val = out.get(key, 0) + c * c2
            if val:
                out[key] = val
            else:
                del out[key]
    return out


class VerifyReport:
    """Outcome of verify(): a violation list plus grading statistics."""

    def __init__(self, violations, delta_histogram, thin, g_max, symmetric):
        self.violations = violations
        self.delta_histogram = delta_histogram
        self.thin = thin
        self.g_max = g_max
        self.symmetric = symmetric

    @property
    def ok(self):
        return not self.violations

    def lines(self):
        out = []
        for v in self.violations:
            out.append("FAIL %s" % v)
        deltas = ",".join(
            "%s:%d" % (("%d/2" % d2) if d2 % 2 else str(d2 // 2), n)
            for d2, n in sorted(self.delta_histogram.items())
        )
        out.append("delta spectrum {%s} -> %s" % (deltas, "thin" if self.thin else "thick"))
        if self.symmetric:
            out.append("q <-> q^-1 symmetry holds at the Poincare level (g_max=%d)" % self.g_max)
        else:
            out.append("FAIL Poincare polynomial is not expressible in a, t, y")
        return out


def verify(c, max_eq=None):
    """Check gradings, squares, anticommutators and the Poincare symmetry.

    Never raises for a bad complex; all problems come back in the report.
    When max_eq is given, the square and anticommutator checks are only
    required to cancel on paths starting at generators with eq <= max_eq;
    this is how truncated (cutoff) complexes are checked away from their
    boundary, where partner paths may have been cut off.
    """
    violations = []
    gens = c.generators
    for n, entries in sorted(c.diffs.items()):
        want = diff_degree(n)
        for (s, d, coeff) in entries:
            got = tuple(gens[d][i] - gens[s][i] for i in range(3))
            if got != want:
                violations.append(
                    "d_%d entry %d->%d has degree %s, expected %s" % (n, s, d, got, want)
                )
    levels = sorted(c.diffs)
    for i, n in enumerate(levels):
        for m in levels[i:]:
            first = _compose(c.diffs[m], c.diffs[n])
            second = _compose(c.diffs[n], c.diffs[m]) if m != n else first
            anti = dict(first)
            for key, val in second.items():
                s = anti.get(key, 0) + val
                if s:
                    anti[key] = s
                else:
                    del anti[key]
            for (s, d), val in sorted(anti.items()):
                if max_eq is not None and gens[s][1] > max_eq:
                    continue
                if n == m:
                    violations.append("d_%d squared is nonzero on %d -> %d" % (n, s, d))
                else:
                    violations.append(
                        "d_%d and d_%d fail to anticommute on %d -> %d" % (n, m, s, d)
                    )
    g_max = None
    symmetric = True
    try:
        g_max = y_rewrite(c.poincare()).g_max
    except NotYExpressible:
        symmetric = False
        # A cutoff complex cannot be q-symmetric; only whole complexes
        # are required to pass the Poincare-level symmetry.
        if max_eq is None:
            violations.append("Poincare polynomial not expressible in a, t, y")
    hist = c.delta_histogram()
    return VerifyReport(violations, hist, len(hist) <= 1, g_max, symmetric)


# -- exact homology ---------------------------------------------------------

def _rank(rows):
    """Rank of a dense Fraction matrix given as a list of row lists."""
    if not rows:
        return 0
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / pv
                row = rows[r]
                prow = rows[rank]
                for j in range(col, ncols):
                    row[j] -= f * prow[j]
        rank += 1
        col += 1
    return rank


def _blocked_ranks(c, n, key_of):
    """Rank of d_N from each bigrade block, as {block_key: rank}.

    key_of maps a generator grading to its amalgamated (block, level) pair;
    d_N must keep block fixed and lower level by one.
    """
    by_key = {}
    for idx, g in enumerate(c.generators):
        by_key.setdefault(key_of(g), []).append(idx)
    pos = {}
    for key, idxs in by_key.items():
        for j, idx in enumerate(idxs):
            pos[idx] = j
    blocks = {}
    for (s, d, coeff) in c.diffs.get(n, []):
        ks = key_of(c.generators[s])
        kd = key_of(c.generators[d])
        if kd[0] != ks[0] or kd[1] != ks[1] - 1:
            raise GradingMismatch(
                "d_%d entry %d->%d does not respect the amalgamated grading" % (n, s, d)
            )
        blocks.setdefault(ks, []).append((s, d, coeff))
    ranks = {}
    for key, entries in blocks.items():
        srcs = by_key[key]
        dsts = by_key[(key[0], key[1] - 1)]
        mat = [[Fraction(0)] * len(dsts) for _ in srcs]
        for (s, d, coeff) in entries:
            mat[pos[s]][pos[d]] += coeff
        ranks[key] = _rank(mat)
    return by_key, ranks


class HomologyReport:
    """Per-bigrade dimensions of the d_N homology plus its Poincare polynomial."""

    def __init__(self, n, poincare, dims):
        self.n = n
        self.poincare = poincare
        self.dims = dims

    @property
    def total_dim(self):
        return sum(self.dims.values())


def homology(c, n):
    """Homology of (C, d_N) for N >= 0, per amalgamated bigrade.

    For N >= 1 generators group by (p, k) = (N*ea + eq, et) and the output
    Poincare polynomial lives in q^p t^k.  For N = 0 they group by
    (q, t') = (eq, et - ea) and the output lives in q^eq t^{t'}; this is the
    Alexander-side regrading.  An absent d_N means the zero differential.
    """
    if n < 0:
        raise ValueError("reductions are only defined for N >= 0")
    want = diff_degree(n)
    for (s, d, _) in c.diffs.get(n, []):
        got = tuple(c.generators[d][i] - c.generators[s][i] for i in range(3))
        if got != want:
            raise GradingMismatch(
                "d_%d entry %d->%d has degree %s, expected %s" % (n, s, d, got, want)
            )
    if n >= 1:
        def key_of(g):
            return (n * g[0] + g[1], g[2])
    else:
        def key_of(g):
            return (g[1], g[2] - g[0])
    by_key, ranks = _blocked_ranks(c, n, key_of)
    dims = {}
    for key, idxs in by_key.items():
        dim = len(idxs)
        dim -= ranks.get(key, 0)
        dim -= ranks.get((key[0], key[1] + 1), 0)
        if dim:
            dims[key] = dim
    poly = Poly3({(0, p, k): dim for (p, k), dim in dims.items()})
    return HomologyReport(n, poly, dims)


def homology_unblocked_dims(c, n):
    """Brute-force route: block by homological level only, not by bigrade.

    Returns {k: dim} computed from ranks of the full (all bigrades at once)
    matrices of d_N between adjacent levels.  Independent cross-check for
    homology(); the two must agree whenever d_N is a valid differential.
    """
    if n >= 1:
        level_of = lambda g: g[2]
    else:
        level_of = lambda g: g[2] - g[0]
    by_level = {}
    for idx, g in enumerate(c.generators):
        by_level.setdefault(level_of(g), []).append(idx)
    pos = {idx: j for idxs in by_level.values() for j, idx in enumerate(idxs)}
    mats = {}
    for (s, d, coeff) in c.diffs.get(n, []):
        ks = level_of(c.generators[s])
        mats.setdefault(ks, []).append((s, d, coeff))
    ranks = {}
    for k, entries in mats.items():
        srcs = by_level[k]
        dsts = by_level.get(k - 1, [])
        mat = [[Fraction(0)] * len(dsts) for _ in srcs]
        for (s, d, coeff) in entries:
            mat[pos[s]][pos[d]] += coeff
        ranks[k] = _rank(mat)
    dims = {}
    for k, idxs in by_level.items():
        dim = len(idxs) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if dim:
            dims[k] = dim
    return dims


def s_invariant(c):
    """The a-grading of the unique d_1 survivor.

    Requires d_1 to be canceling; the survivor must sit at a^S q^{-S} t^0.
    Raises NotCanceling when the d_1 homology is not one-dimensional and
    SurvivorOffLine when the surviving class violates q = -a or t != 0, or
    mixes a-gradings.
    """
    report = homology(c, 1)
    if report.total_dim != 1:
        raise NotCanceling(
            "d_1 homology has dimension %d, expected 1" % report.total_dim
        )
    ((p, k),) = report.dims
    if p != 0 or k != 0:
        raise SurvivorOffLine("survivor sits at amalgamated bigrade (%d, %d)" % (p, k))
    # Identify the class: inside the (p,k) = (0,0) block, pick a kernel
    # vector not in the image and read off its a-grading support.
    block = [
        i
        for i, g in enumerate(c.generators)
        if g[0] + g[1] == 0 and g[2] == 0
    ]
    below = [
        i
        for i, g in enumerate(c.generators)
        if g[0] + g[1] == 0 and g[2] == -1
    ]
    above = [
        i
        for i, g in enumerate(c.generators)
        if g[0] + g[1] == 0 and g[2] == 1
    ]
    entries = c.diffs.get(1, [])
    bpos = {idx: j for j, idx in enumerate(block)}
    out_rows = [[Fraction(0)] * len(below) for _ in block]
    dpos = {idx: j for j, idx in enumerate(below)}
    in_rows = [[Fraction(0)] * len(block) for _ in above]
    apos = {idx: j for j, idx in enumerate(above)}
    for (s, d, coeff) in entries:
        if s in bpos and d in dpos:
            out_rows[bpos[s]][dpos[d]] += coeff
        if s in apos and d in bpos:
            in_rows[apos[s]][bpos[d]] += coeff
    survivor = _kernel_mod_image(out_rows, in_rows)
    if survivor is None:
        raise SurvivorOffLine("could not isolate a one-dimensional surviving class")
    support = [block[j] for j, v in enumerate(survivor) if v]
    a_values = {c.generators[i][0] for i in support}
    if len(a_values) != 1:
        raise SurvivorOffLine("surviving class mixes a-gradings %s" % sorted(a_values))
    return a_values.pop()


def _kernel_mod_image(out_rows, in_rows):
    """A vector spanning ker(out) / im(in), assuming that quotient is a line.

    out_rows: matrix of the outgoing map (rows = block generators);
    in_rows: matrix of the incoming map (rows = generators above).
    Returns the coordinates of a representative, or None.
    """
    ncols = len(out_rows)
    if ncols == 0:
        return None
    # Kernel basis of the outgoing map.
    width = len(out_rows[0]) if out_rows and out_rows[0] else 0
    aug = [list(row) + [Fraction(0)] * ncols for row in out_rows]
    for i in range(ncols):
        aug[i][width + i] = Fraction(1)
    # Row-reduce on the first `width` columns; rows whose leading part
    # vanishes give kernel vectors in the trailing columns.
    rank = 0
    for col in range(width):
        pivot = None
        for r in range(rank, ncols):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        pv = aug[rank][col]
        for r in range(ncols):
            if r != rank and aug[r][col]:
                f = aug[r][col] / pv
                for j in range(col, width + ncols):
                    aug[r][j] -= f * aug[rank][j]
        rank += 1
    kernel = [row[width:] for row in aug[rank:]]
    image = [list(row) for row in in_rows if any(row)]
    # Reduce kernel vectors modulo the image; exactly one must survive.
    basis = []
    for vec in image:
        basis.append(vec)
    basis_rank_before = _rank(basis) if basis else 0
    survivor = None
    for vec in kernel:
        trial = [list(r) for r in basis] + [list(vec)]
        if _rank(trial) > basis_rank_before:
            survivor = vec
            basis = trial
            basis_rank_before += 1
            break
    return survivor


# -- constructions ----------------------------------------------------------

def _solve_signs(gradings, arrows):
    """Assign +-1 coefficients making the arrow family anticommute.

    arrows: dict N -> list of (src, dst).  Every length-two composite
    (either order) between a fixed source and target must cancel against
    exactly one partner path, which yields a linear system over GF(2) for
    the sign exponents; free variables are set to +1.  Raises ComplexError
    when a composite has no partner or the system is inconsistent, which
    means the arrow sets themselves are wrong (signs cannot help).
    """
    edge_index = {}
    edges = []
    for n in sorted(arrows):
        for (s, d) in sorted(arrows[n]):
            edge_index[(n, s, d)] = len(edges)
            edges.append((n, s, d))
    equations = []
    levels = sorted(arrows)
    by_src = {
        n: {} for n in levels
    }
    for n in levels:
        for (s, d) in arrows[n]:
            by_src[n].setdefault(s, []).append(d)
    for i, n in enumerate(levels):
        for m in levels[i:]:
            paths = {}
            for (s, mid) in arrows[n]:
                for d in by_src[m].get(mid, []):
                    paths.setdefault((s, d), []).append(
                        (edge_index[(n, s, mid)], edge_index[(m, mid, d)])
                    )
            if m != n:
                for (s, mid) in arrows[m]:
                    for d in by_src[n].get(mid, []):
                        paths.setdefault((s, d), []).append(
                            (edge_index[(m, s, mid)], edge_index[(n, mid, d)])
                        )
            for (s, d), plist in sorted(paths.items()):
                if len(plist) == 1:
                    raise ComplexError(
                        "unpairable composite d_%d/d_%d path %d -> %d" % (n, m, s, d)
                    )
                if len(plist) == 2:
                    (a1, a2), (b1, b2) = plist
                    row = set()
                    for e in (a1, a2, b1, b2):
                        if e in row:
                            row.remove(e)
                        else:
                            row.add(e)
                    equations.append((row, 1))
                elif len(plist) > 2:
                    raise ComplexError(
                        "more than two parallel composites %d -> %d; "
                        "the +-1 sign rule does not apply" % (s, d)
                    )
    # Gaussian elimination over GF(2) on a set-of-indices representation;
    # free variables stay 0, i.e. the edge keeps coefficient +1.
    nvars = len(edges)
    reduced = []
    for (r, rhs) in equations:
        r = set(r)
        for (pr, prhs, pivot) in reduced:
            if pivot in r:
                r ^= pr
                rhs ^= prhs
        if r:
            pivot = min(r)
            reduced.append((r, rhs, pivot))
        elif rhs:
            raise ComplexError("sign constraints are inconsistent")
    values = [0] * nvars
    for (r, rhs, pivot) in sorted(reduced, key=lambda x: -x[2]):
        s = rhs
        for e in r:
            if e != pivot:
                s ^= values[e]
        values[pivot] = s
    signs = {}
    for idx, (n, s, d) in enumerate(edges):
        signs[(n, s, d)] = -1 if values[idx] else 1
    return signs


def complex_from_arrows(gradings, arrows, label=None):
    """Build a DotComplex from unsigned arrow sets via the GF(2) sign pass."""
    signs = _solve_signs(gradings, arrows)
    diffs = {}
    for n, pairs in arrows.items():
        diffs[n] = [
            (s, d, Fraction(signs[(n, s, d)])) for (s, d) in sorted(pairs)
        ]
    c = DotComplex(gradings, diffs, label=label)
    report = verify(c)
    if not report.ok:
        raise ComplexError(
            "constructed complex failed verification: %s" % "; ".join(report.violations)
        )
    return c


def build_torus_complex(n, m):
    """The dot complex of T(n, m) for n in {2, 3}.

    Generators are the superpolynomial monomials; d_1 is the explicit
    canceling matching, d_{-1} (and for n = 3 also d_{-2}) its image under
    the q -> q^{-1} involution, and for n = 3 the d_2 / d_0 arrows pair each
    cancelled source with its image.  Signs come from the deterministic
    GF(2) pass, and the result is re-verified before being returned.
    """
    from .torus import torus_id, _t3_families

    n, m = torus_id(n, m)
    if n == 2:
        k = (m - 1) // 2
        gens = []
        index = {}
        for i in range(k + 1):
            index[("u", i)] = len(gens)
            gens.append((2 * k, 4 * i - 2 * k, 2 * i))
        for i in range(1, k + 1):
            index[("w", i)] = len(gens)
            gens.append((2 * k + 2, 4 * i - 2 * k - 2, 2 * i + 1))
        d1 = [(index[("w", i)], index[("u", i)]) for i in range(1, k + 1)]
        dm1 = [(index[("w", i)], index[("u", i - 1)]) for i in range(1, k + 1)]
        return complex_from_arrows(
            gens, {1: d1, -1: dm1}, label="T(2,%d)" % m
        )
    if n != 3:
        raise ValueError("only the n = 2 and n = 3 families have explicit complexes")

    k, lv0, lv1, lv2 = _t3_families(m)
    gens = []
    index = {}
    for fam, entries in (("lv0", lv0), ("lv1", lv1), ("lv2", lv2)):
        for key, g in entries:
            index[(fam, key)] = len(gens)
            gens.append(g)
    rem1 = m % 3 == 1

    def even_range(j):
        return 3 * j if rem1 else 3 * j + 1

    def odd_range(j):
        return 3 * j - 1 if rem1 else 3 * j

    def top_range(j):
        return 3 * j + 1 if rem1 else 3 * j + 2

    one = Fraction(1)
    d1, dm1, d2, dm2, d0 = [], [], [], [], []
    for j in range(k + 1):
        for i in range(even_range(j)):
            src = index[("lv1", ("even", j, i))]
            d1.append((src, index[("lv0", (j, i))], one))
            dm1.append((src, index[("lv0", (j, i + 1))], one))
        for i in range(odd_range(j)):
            src = index[("lv1", ("odd", j, i))]
            d2.append((src, index[("lv0", (j, i))], one))
            d0.append((src, index[("lv0", (j, i + 1))], one))
            dm2.append((src, index[("lv0", (j, i + 2))], one))
            if i >= 1:
                d1.append((src, index[("lv0", (j - 1, i - 1))], one))
            else:
                dm1.append((src, index[("lv0", (j - 1, 0))], -one))
    for j in range(k):
        for i in range(top_range(j)):
            src = index[("lv2", (j, i))]
            d1.append((src, index[("lv1", ("odd", j + 1, i))], -one))
            if i >= 1:
                d1.append((src, index[("lv1", ("even", j, i - 1))], one))
            dm1.append((src, index[("lv1", ("odd", j + 1, i + 1))], -one))
            d2.append((src, index[("lv1", ("even", j + 1, i))], one))
            d0.append((src, index[("lv1", ("even", j + 1, i + 1))], one))
            dm2.append((src, index[("lv1", ("even", j + 1, i + 2))], one))
    c = DotComplex(
        gens,
        {1: d1, -1: dm1, 2: d2, -2: dm2, 0: d0},
        label="T(3,%d)" % m,
    )
    report = verify(c)
    if not report.ok:
        raise ComplexError(
            "torus complex failed verification: %s" % "; ".join(report.violations[:4])
        )
    return c


def build_thin_complex(sawtooth_k, squares, label=None):
    """Thin complex: one zigzag summand plus a four-generator square per term.

    sawtooth_k: signed half-signature; the zigzag is the T(2, |2k|+1) chain
    (mirrored when negative, a lone generator when zero).  squares: Poly3 of
    base monomials with nonnegative multiplicities; a base x contributes the
    generators x, x*a^{-2}q^2 t^{-1}, x*a^{-2}q^{-2}t^{-3}, x*a^{-4}t^{-4}
    with the square's two d_1 and two d_{-1} arrows.
    """
    gens = []
    d1 = []
    dm1 = []
    k = sawtooth_k
    if k == 0:
        gens.append((0, 0, 0))
    else:
        ka = abs(k)
        negate = k < 0
        base = len(gens)
        for i in range(ka + 1):
            g = (2 * ka, 4 * i - 2 * ka, 2 * i)
            gens.append(tuple(-x for x in g) if negate else g)
        for i in range(1, ka + 1):
            g = (2 * ka + 2, 4 * i - 2 * ka - 2, 2 * i + 1)
            gens.append(tuple(-x for x in g) if negate else g)
        for i in range(1, ka + 1):
            w = base + ka + i
            if not negate:
                d1.append((w, base + i))
                dm1.append((w, base + i - 1))
            else:
                # Mirrored zigzag: arrows transpose, levels stay put.
                d1.append((base + i, w))
                dm1.append((base + i - 1, w))
    for (ea, eq, et), mult in sorted(squares.terms.items()):
        if mult < 0:
            raise ComplexError("square multiplicities must be nonnegative")
        for _ in range(mult):
            base = len(gens)
            gens.append((ea, eq, et))
            gens.append((ea - 2, eq + 2, et - 1))
            gens.append((ea - 2, eq - 2, et - 3))
            gens.append((ea - 4, eq, et - 4))
            d1.append((base, base + 1))
            d1.append((base + 2, base + 3))
            dm1.append((base, base + 2))
            dm1.append((base + 1, base + 3))
    return complex_from_arrows(gens, {1: d1, -1: dm1}, label=label)


# -- text round-trip --------------------------------------------------------

def serialize_complex(c):
    """Line-based text form: gen/diff records, ids dense from zero."""
    lines = []
    if c.label:
        lines.append("# %s" % c.label)
    for i, (ea, eq, et) in enumerate(c.generators):
        lines.append("gen %d %d %d %d" % (i, ea, eq, et))
    for n in sorted(c.diffs):
        for (s, d, coeff) in c.diffs[n]:
            f = Fraction(coeff)
            lines.append("diff %d %d %d %d/%d" % (n, s, d, f.numerator, f.denominator))
    return "\n".join(lines) + "\n"


def deserialize_complex(text, label=None):
    gens = {}
    diffs = {}
    seen_edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "gen":
            if len(parts) != 5:
                raise ComplexParseError("gen needs: id ea eq et", lineno)
            try:
                idx, ea, eq, et = (int(x) for x in parts[1:])
            except ValueError:
                raise ComplexParseError("gen fields must be integers", lineno)
            if idx in gens:
                raise ComplexParseError("duplicate generator id %d" % idx, lineno)
            gens[idx] = (ea, eq, et)
        elif parts[0] == "diff":
            if len(parts) != 5:
                raise ComplexParseError("diff needs: N src dst num/den", lineno)
            try:
                n, s, d = int(parts[1]), int(parts[2]), int(parts[3])
                num_s, _, den_s = parts[4].partition("/")
                num = int(num_s)
                den = int(den_s) if den_s else 1
            except ValueError:
                raise ComplexParseError("diff fields must be integers", lineno)
            if den <= 0:
                raise ComplexParseError("denominator must be positive", lineno)
            if (n, s, d) in seen_edges:
                raise ComplexParseError("duplicate diff entry", lineno)
            seen_edges.add((n, s, d))
            diffs.setdefault(n, []).append((s, d, Fraction(num, den), lineno))
        else:
            raise ComplexParseError("unknown record %r" % parts[0], lineno)
    if sorted(gens) != list(range(len(gens))):
        raise ComplexParseError("generator ids must be dense from 0", 0)
    order = [gens[i] for i in range(len(gens))]
    cleaned = {}
    for n, entries in diffs.items():
        for (s, d, coeff, lineno) in entries:
            if s >= len(order) or d >= len(order) or s < 0 or d < 0:
                raise ComplexParseError("diff refers to a missing generator", lineno)
            cleaned.setdefault(n, []).append((s, d, coeff))
    return DotComplex(order, cleaned, label=label)

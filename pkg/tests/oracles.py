"""Brute-force cohomology pipeline, independent of the package internals.

Everything here works with plain ``fractions.Fraction`` lists and its own
Gaussian elimination; cochain constraint and coboundary matrices are built
entry by entry from the defining formulas, evaluated on *all* index tuples
(not just the ordered ones the vectorised pipeline uses).  Used as the
second route for the oracle-equivalence acceptance check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

F0 = Fraction(0)
F1 = Fraction(1)


def rank_of(rows):
    """Row rank by plain fraction Gaussian elimination (destructive copy)."""
    m = [list(r) for r in rows if any(x != 0 for x in r)]
    if not m:
        return 0
    cols = len(m[0])
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F1 / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def kernel_of(rows, ncols):
    """Kernel basis via the free-column parametrisation."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F1 / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [F0] * ncols
        v[free] = F1
        for row_idx, pc in enumerate(pivots):
            v[pc] = -m[row_idx][free]
        basis.append(v)
    return basis


class BruteAlgebra:
    """dim, bracket c[i][j][k], alpha[i][j] (column j = image of e_j),
    one-dimensional module with scalar beta and per-generator scalars rho."""

    def __init__(self, dim, brackets, alpha, beta, rho=None):
        self.n = dim
        self.c = [[[F0] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in brackets.items():
            for k, x in enumerate(vec):
                self.c[i][j][k] = Fraction(x)
                self.c[j][i][k] = Fraction(x)
        self.alpha = [[Fraction(alpha[i][j]) for j in range(dim)] for i in range(dim)]
        self.beta = Fraction(beta)
        self.rho = [Fraction(x) for x in (rho or [0] * dim)]

    # -- linear helpers on coordinate vectors --------------------------------

    def bracket(self, x, y):
        out = [F0] * self.n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k in range(self.n):
                    out[k] += xi * yj * self.c[i][j][k]
        return out

    def twist(self, x):
        return [sum(self.alpha[i][j] * x[j] for j in range(self.n)) for i in range(self.n)]

    def basis(self, i):
        return [F1 if k == i else F0 for k in range(self.n)]

    def rho_of(self, x):
        return sum(self.rho[i] * x[i] for i in range(self.n))


def brute_h2_dims(b: BruteAlgebra):
    """(dim C2, dim Z2, dim B2, dim H2) by the monomial-basis pipeline."""
    n = b.n
    coords = [(i, j) for i in range(n) for j in range(i, n)]  # symmetric basis
    ncols = len(coords)

    def f_value(vec_coeffs, x, y):
        """Evaluate the symmetric bilinear monomial combination on vectors."""
        total = F0
        for idx, (i, j) in enumerate(coords):
            coeff = vec_coeffs[idx]
            if coeff == 0:
                continue
            # monomial equals 1 on (i, j) and (j, i), 0 elsewhere
            total += coeff * (x[i] * y[j] + (x[j] * y[i] if i != j else F0))
        return total

    # C2 constraints on every (not just ordered) pair
    c2_rows = []
    for i, j in product(range(n), repeat=2):
        row = []
        ai, aj = b.twist(b.basis(i)), b.twist(b.basis(j))
        for col in range(ncols):
            unit = [F0] * ncols
            unit[col] = F1
            row.append(b.beta * f_value(unit, b.basis(i), b.basis(j)) - f_value(unit, ai, aj))
        c2_rows.append(row)
    dim_c2 = ncols - rank_of(c2_rows)

    # d2 rows on every triple
    d2_rows = []
    for i, j, k in product(range(n), repeat=3):
        row = []
        ei, ej, ek = b.basis(i), b.basis(j), b.basis(k)
        ai, aj, ak = b.twist(ei), b.twist(ej), b.twist(ek)
        for col in range(ncols):
            unit = [F0] * ncols
            unit[col] = F1
            value = (
                f_value(unit, ai, b.bracket(ej, ek))
                + f_value(unit, aj, b.bracket(ei, ek))
                + f_value(unit, ak, b.bracket(ei, ej))
                + b.rho_of(ai) * f_value(unit, ej, ek)
                + b.rho_of(aj) * f_value(unit, ei, ek)
                + b.rho_of(ak) * f_value(unit, ei, ej)
            )
            row.append(value)
        d2_rows.append(row)
    dim_z2 = ncols - rank_of(c2_rows + d2_rows)

    # C1 constraints and d1 images
    c1_rows = []
    for j in range(n):
        row = []
        aj = b.twist(b.basis(j))
        for col in range(n):
            # unit 1-cochain g_col with g(e_col) = 1
            row.append(aj[col] - (b.beta if col == j else F0))
        c1_rows.append(row)
    b2_vectors = []
    for g in kernel_of(c1_rows, n):
        image = []
        for i, j in coords:
            bracket = b.bracket(b.basis(i), b.basis(j))
            value = sum(g[k] * bracket[k] for k in range(n))
            value -= b.rho[i] * g[j] + b.rho[j] * g[i]
            image.append(value)
        b2_vectors.append(image)
        # membership in Z2, entry by entry
        for row in c2_rows + d2_rows:
            assert sum(r * x for r, x in zip(row, image)) == 0, "d1 image escapes Z2"
    dim_b2 = rank_of(b2_vectors)
    return dim_c2, dim_z2, dim_b2, dim_z2 - dim_b2

"""The low-dimensional catalog and the bootstrapping classification.

Catalog entries are stored exactly as printed in their source bullets, with
names verbatim.  A separate constraint table records what residual analysis
finds: admissibility conditions of the family ("domain") and polynomial
equations the axioms force on the parameters ("requires").  The tool never
silently repairs an entry; the constraints surface in verify reports.

The classification routine rebuilds algebras of dimension n from algebras
of dimension < n: pick a base J and a module V, solve for the module
actions, compute H2, and build one extension per coset representative.  A
separate branch handles the twist shapes that do not preserve J (full
Jordan blocks), where the normal form [u_i, u_j] = x_ij * v is forced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .algebra import Algebra, Invariants, isomorphism_invariants, check_hom_jacobi, check_multiplicative, is_regular
from .cohomology import Cochain2, compute_H2
from .errors import MissingParameter, UnknownEntry
from .extensions import ExtensionSpec, build_extension
from .linalg import Matrix, vec_add, vec_scale
from .reports import CheckReport
from .representations import Representation, solve_representations_dim1
from .scalars import ONE, QQ, ZERO

DEFAULT_GRID = (QQ(-2), QQ(-1), QQ(1), QQ(2), QQ(3), QQ(1, 2))


@dataclass(frozen=True)
class Constraint:
    """One recorded condition on an entry's parameters."""

    tag: str  # "PAPER" or "DERIVED"
    kind: str  # "domain" (admissibility) or "requires" (axiom equation)
    text: str
    holds: Callable  # params -> bool


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dim: int
    params: tuple
    builder: Callable  # params dict -> (brackets dict, alpha Matrix)
    constraints: tuple = ()

    def instantiate(self, values: dict) -> Algebra:
        missing = [p for p in self.params if p not in values]
        if missing:
            raise MissingParameter(f"{self.name} needs parameters {missing}")
        params = {k: QQ(v) if isinstance(v, (int, str)) else v for k, v in values.items()}
        brackets, alpha = self.builder(params)
        return Algebra.from_brackets(self.dim, brackets, alpha)

    def admissible(self, values: dict) -> bool:
        return all(c.holds(values) for c in self.constraints)


def _e(n: int, i: int):
    return tuple(ONE if k == i else ZERO for k in range(n))


def _diag(*values) -> Matrix:
    return Matrix.diagonal(list(values))


def _cols(*columns) -> Matrix:
    return Matrix.from_columns(list(columns))


def _nonzero(*names):
    return Constraint(
        "PAPER",
        "domain",
        " and ".join(f"{n} != 0" for n in names) + " (alpha invertible)",
        lambda p, names=names: all(p[n] != 0 for n in names),
    )


def _entries() -> tuple:
    e = _e
    out = []

    # -- dimension 2 ---------------------------------------------------------
    out.append(
        CatalogEntry(
            "J^1_{1,1}",
            2,
            ("a",),
            lambda p: ({(0, 0): e(2, 1)}, _diag(p["a"], p["a"] ** 2)),
            (_nonzero("a"),),
        )
    )
    out.append(
        CatalogEntry(
            "J^2_{1,1}",
            2,
            (),
            lambda p: ({(1, 1): e(2, 0)}, _cols((ONE, ZERO), (ONE, ONE))),
        )
    )

    # -- dimension 3, twist preserving the 2-dimensional part -----------------
    out.append(
        CatalogEntry(
            "J^1_{2,1}",
            3,
            ("a", "b"),
            lambda p: ({(0, 0): e(3, 1)}, _diag(p["a"], p["a"] ** 2, p["b"])),
            (_nonzero("a", "b"),),
        )
    )
    out.append(
        CatalogEntry(
            "J^2_{2,1}",
            3,
            ("a",),
            lambda p: ({(0, 0): e(3, 2), (1, 1): e(3, 2)}, _diag(p["a"], -p["a"], p["a"] ** 2)),
            (_nonzero("a"),),
        )
    )
    out.append(
        CatalogEntry(
            "J^3_{2,1}",
            3,
            ("a",),
            lambda p: ({(0, 0): e(3, 2)}, _diag(p["a"], -p["a"], p["a"] ** 2)),
            (_nonzero("a"),),
        )
    )
    out.append(
        CatalogEntry(
            "J^4_{2,1}",
            3,
            ("a", "b"),
            lambda p: ({(0, 0): e(3, 2)}, _diag(p["a"], p["b"], p["a"] ** 2)),
            (
                _nonzero("a", "b"),
                Constraint("PAPER", "domain", "b^2 != a^2", lambda p: p["b"] ** 2 != p["a"] ** 2),
            ),
        )
    )
    out.append(
        CatalogEntry(
            "J^5_{2,1}",
            3,
            ("b",),
            lambda p: (
                {(1, 1): e(3, 0)},
                _cols((ONE, ZERO, ZERO), (ONE, ONE, ZERO), (ZERO, ZERO, p["b"])),
            ),
            (_nonzero("b"),),
        )
    )
    out.append(
        CatalogEntry(
            "J^6_{2,1}",
            3,
            ("a", "c"),
            lambda p: (
                {(1, 1): e(3, 2)},
                _cols((p["a"], ZERO, ZERO), (p["c"], p["a"], ZERO), (ZERO, ZERO, p["a"] ** 2)),
            ),
            (_nonzero("a"),),
        )
    )
    out.append(
        CatalogEntry(
            "J^7_{1,2}",
            3,
            ("a", "c"),
            lambda p: ({(0, 0): e(3, 1)}, _diag(p["a"], p["a"] ** 2, p["c"])),
            (
                _nonzero("a", "c"),
                Constraint("PAPER", "domain", "c != a^2", lambda p: p["c"] != p["a"] ** 2),
            ),
        )
    )
    out.append(
        CatalogEntry(
            "J^8_{1,2}",
            3,
            ("a", "x", "y"),
            lambda p: (
                {(0, 0): vec_add(vec_scale(p["x"], e(3, 0)), vec_scale(p["y"], e(3, 1)))},
                _diag(p["a"], p["a"] ** 2, p["a"] ** 2),
            ),
            (
                _nonzero("a"),
                Constraint(
                    "DERIVED",
                    "requires",
                    "x*(a^2 - a) = 0  (multiplicativity residual at (e1,e1))",
                    lambda p: p["x"] * (p["a"] ** 2 - p["a"]) == 0,
                ),
                Constraint(
                    "DERIVED",
                    "requires",
                    "a*x^2 = 0 and a*x*y = 0  (hom-jacobi residual at (e1,e1,e1))",
                    lambda p: p["a"] * p["x"] ** 2 == 0 and p["a"] * p["x"] * p["y"] == 0,
                ),
            ),
        )
    )
    out.append(
        CatalogEntry(
            "J^9_{1,2}",
            3,
            ("a", "c"),
            lambda p: (
                {(0, 0): e(3, 1)},
                _cols((p["a"], ZERO, ZERO), (ZERO, p["a"] ** 2, ZERO), (ZERO, p["c"], p["a"] ** 2)),
            ),
            (_nonzero("a"),),
        )
    )
    out.append(
        CatalogEntry(
            "J^{10}_{1,2}",
            3,
            ("a",),
            lambda p: ({(0, 2): e(3, 1)}, _diag(p["a"], p["a"] ** 2, p["a"] ** 2)),
            (
                _nonzero("a"),
                Constraint(
                    "DERIVED",
                    "requires",
                    "a^3 - a^2 = 0  (multiplicativity residual at (e1,e3))",
                    lambda p: p["a"] ** 3 - p["a"] ** 2 == 0,
                ),
            ),
        )
    )
    out.append(
        CatalogEntry(
            "J^{11}_{1,2}",
            3,
            ("a", "c"),
            lambda p: (
                {(0, 2): e(3, 1)},
                _cols((p["a"], ZERO, ZERO), (ZERO, p["a"] ** 2, ZERO), (ZERO, p["c"], p["a"] ** 2)),
            ),
            (
                _nonzero("a"),
                Constraint(
                    "DERIVED",
                    "requires",
                    "a^3 - a^2 = 0  (multiplicativity residual at (e1,e3))",
                    lambda p: p["a"] ** 3 - p["a"] ** 2 == 0,
                ),
            ),
        )
    )

    # -- dimension 3, twist with e1 |-> e1 + e3 -------------------------------
    def jordan_alpha(p):
        return _cols((ONE, ZERO, ONE), (p["c"], ONE, ZERO), (ZERO, ZERO, ONE))

    out.append(
        CatalogEntry(
            "J^{12}_{2,1}",
            3,
            ("c", "x"),
            lambda p: (
                {(0, 0): e(3, 2), (0, 1): e(3, 2), (1, 1): vec_scale(p["x"], e(3, 2))},
                jordan_alpha(p),
            ),
            (
                Constraint(
                    "DERIVED",
                    "requires",
                    "c = 0  (multiplicativity residual -c*e3 at (e1,e2))",
                    lambda p: p["c"] == 0,
                ),
                Constraint(
                    "DERIVED",
                    "requires",
                    "c^2 + 2*c = 0  (multiplicativity residual at (e2,e2))",
                    lambda p: p["c"] ** 2 + 2 * p["c"] == 0,
                ),
            ),
        )
    )
    out.append(
        CatalogEntry(
            "J^{13}_{2,1}",
            3,
            ("c",),
            lambda p: ({(0, 0): e(3, 2), (1, 1): e(3, 2)}, jordan_alpha(p)),
            (
                Constraint(
                    "DERIVED",
                    "requires",
                    "c = 0  (multiplicativity residuals -c*e3 at (e1,e2) and -c^2*e3 at (e2,e2))",
                    lambda p: p["c"] == 0,
                ),
            ),
        )
    )
    out.append(
        CatalogEntry(
            "J^{14}_{2,1}",
            3,
            (),
            lambda p: (
                {(0, 0): e(3, 2)},
                _cols((ONE, ZERO, ONE), (ONE, ONE, ZERO), (ZERO, ZERO, ONE)),
            ),
            (
                Constraint(
                    "DERIVED",
                    "requires",
                    "unsatisfiable: multiplicativity residual -e3 at (e2,e2) has no parameters to fix",
                    lambda p: False,
                ),
            ),
        )
    )
    out.append(
        CatalogEntry(
            "J^{15}_{2,1}",
            3,
            ("c",),
            lambda p: ({(0, 1): e(3, 2), (1, 1): e(3, 2)}, jordan_alpha(p)),
            (
                Constraint(
                    "DERIVED",
                    "requires",
                    "2*c = 0  (multiplicativity residual at (e2,e2))",
                    lambda p: p["c"] == 0,
                ),
            ),
        )
    )
    out.append(
        CatalogEntry(
            "J^{16}_{2,1}",
            3,
            ("c",),
            lambda p: ({(1, 1): e(3, 2)}, jordan_alpha(p)),
        )
    )
    out.append(
        CatalogEntry(
            "J^{17}_{2,1}",
            3,
            ("c",),
            lambda p: ({(0, 1): e(3, 2)}, jordan_alpha(p)),
            (
                Constraint(
                    "DERIVED",
                    "requires",
                    "2*c = 0  (multiplicativity residual at (e2,e2))",
                    lambda p: p["c"] == 0,
                ),
            ),
        )
    )
    return tuple(out)


_CATALOG = _entries()
_BY_NAME = {entry.name: entry for entry in _CATALOG}


def catalog_list() -> tuple:
    return _CATALOG


def catalog_entry(name: str) -> CatalogEntry:
    if name not in _BY_NAME:
        raise UnknownEntry(f"no catalog entry named {name!r}")
    return _BY_NAME[name]


def instantiate(name: str, params: dict) -> Algebra:
    return catalog_entry(name).instantiate(params)


@dataclass(frozen=True)
class EntryReport:
    name: str
    params: dict
    hom_jacobi: CheckReport
    multiplicative: CheckReport
    regular: bool
    constraint_status: tuple  # (Constraint, holds?) pairs

    @property
    def passed(self) -> bool:
        return self.hom_jacobi.passed and self.multiplicative.passed and self.regular

    def describe(self) -> str:
        from .scalars import format_scalar

        shown = ", ".join(f"{k}={format_scalar(v)}" for k, v in sorted(self.params.items()))
        lines = [f"{self.name} at ({shown})"]
        lines.append(self.hom_jacobi.describe())
        lines.append(self.multiplicative.describe())
        lines.append(f"regular: {self.regular}")
        for constraint, ok in self.constraint_status:
            lines.append(f"[{constraint.tag}] {constraint.text}: {'holds' if ok else 'VIOLATED'}")
        return "\n".join(lines)


def verify_entry(name: str, params: dict) -> EntryReport:
    """Instantiate and run every axiom check, reporting exact residuals and
    the recorded constraint status at these parameters."""
    entry = catalog_entry(name)
    values = {k: QQ(v) if isinstance(v, (int, str)) else v for k, v in params.items()}
    algebra = entry.instantiate(values)
    return EntryReport(
        name=name,
        params=values,
        hom_jacobi=check_hom_jacobi(algebra),
        multiplicative=check_multiplicative(algebra),
        regular=is_regular(algebra),
        constraint_status=tuple((c, c.holds(values)) for c in entry.constraints),
    )


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassifyOutput:
    algebra: Algebra
    provenance: dict
    invariants: Invariants
    matched: tuple  # catalog entry names with identical invariants at some grid point

    def verified(self) -> bool:
        return (
            check_hom_jacobi(self.algebra).passed
            and check_multiplicative(self.algebra).passed
        )


def _admissible_points(entry: CatalogEntry, grid) -> list:
    points = []
    for combo in product(grid, repeat=len(entry.params)):
        values = dict(zip(entry.params, combo))
        if entry.admissible(values):
            points.append(values)
    if not entry.params and entry.admissible({}):
        points.append({})
    return points


def match_catalog(algebra: Algebra, grid=DEFAULT_GRID) -> tuple:
    """Names of catalog entries with identical invariants at some admissible
    grid point.  Equality of invariants never claims isomorphism; a match is
    'possibly isomorphic', a non-match is a certificate of difference."""
    inv = isomorphism_invariants(algebra)
    names = []
    for entry in _CATALOG:
        if entry.dim != algebra.dim:
            continue
        for values in _admissible_points(entry, grid):
            if isomorphism_invariants(entry.instantiate(values)) == inv:
                names.append(entry.name)
                break
    return tuple(names)


def _abelian1(a) -> Algebra:
    return Algebra.abelian(1, Matrix.from_rows([[a]]))


def _extensions_from_base(base: Algebra, beta_scalar, provenance: dict, include_zero: bool) -> list:
    """One-dimensional-module step of the algorithm: solve for rho, compute
    H2, and emit the extension of each coset representative."""
    outputs = []
    solved = solve_representations_dim1(base, beta_scalar)
    for rep in solved.representations:
        h2 = compute_H2(rep)
        thetas = list(h2.representatives)
        if len(thetas) >= 2:
            combined = thetas[0]
            for extra in thetas[1:]:
                combined = combined + extra
            thetas.append(combined)
        if include_zero or not thetas:
            thetas.append(Cochain2.zero(rep))
        for theta in thetas:
            spec = ExtensionSpec(base, rep, theta)
            built = build_extension(spec)
            info = dict(provenance)
            info.update(
                {
                    "rho": [[str(x) for x in row.entries[0]] for row in rep.rho],
                    "h2_dims": list(h2.dims),
                    "theta_zero": theta.is_zero(),
                }
            )
            outputs.append((built.algebra, info))
    return outputs


def _jordan_block_normal_form(size: int, x_values: dict) -> Algebra:
    """The forced shape when the twist is a single Jordan block on
    (v, u_1, ..., u_s): eigenvalue 1, [v, u_i] = 0, [u_i, u_j] = x_ij v."""
    n = size
    rows = []
    for i in range(n):
        rows.append(tuple(ONE if j == i else (ONE if j == i + 1 else ZERO) for j in range(n)))
    alpha = Matrix.from_rows(rows)
    brackets = {}
    for (i, j), x in x_values.items():
        brackets[(i, j)] = vec_scale(QQ(x), _e(n, 0))
    return Algebra.from_brackets(n, brackets, alpha)


def classify(dim_target: int, grid=DEFAULT_GRID) -> list:
    """Rebuild the solvable regular multiplicative algebras of the target
    dimension from smaller ones; every output passes the axiom checks.

    Deduplication is by invariants only: outputs sharing invariants are
    'possibly isomorphic', nothing more is decided.
    """
    if dim_target == 2:
        raw = _classify2(grid)
    elif dim_target == 3:
        raw = _classify3(grid)
    else:
        raise ValueError("classification is implemented for dimensions 2 and 3")
    outputs = []
    for algebra, provenance in raw:
        outputs.append(
            ClassifyOutput(
                algebra,
                provenance,
                isomorphism_invariants(algebra),
                match_catalog(algebra, grid),
            )
        )
    return outputs


def _classify2(grid) -> list:
    outputs = []
    nonzero = [g for g in grid if g != 0]
    # diagonal twist: base = abelian dim 1, module dim 1
    for a in nonzero:
        for b in nonzero:
            outputs.extend(
                _extensions_from_base(
                    _abelian1(a),
                    b,
                    {"branch": "diagonal", "a": str(a), "b": str(b)},
                    include_zero=False,
                )
            )
    # Jordan-block twist: eigenvalue forced to 1, brackets into span{v}
    outputs.append(
        (
            _jordan_block_normal_form(2, {(1, 1): ONE}),
            {
                "branch": "jordan-block",
                "forced": "a=1 (multiplicativity residual x*(a - a^2) at (u1,u1))",
            },
        )
    )
    # drop abelian outputs: only nonabelian families are catalogued
    return [(alg, info) for alg, info in outputs if not alg.is_abelian()]


def _classify3(grid) -> list:
    outputs = []
    nonzero = [g for g in grid if g != 0]
    sample_a = [g for g in (QQ(2), QQ(3), QQ(1, 2)) if g in grid] or nonzero[:1]
    # base J^1_{1,1}: H2 = 0, extension is the direct sum J^1_{2,1}
    for a in sample_a:
        base = instantiate("J^1_{1,1}", {"a": a})
        for b in nonzero:
            outputs.extend(
                _extensions_from_base(
                    base,
                    b,
                    {"branch": "base J^1_{1,1}", "a": str(a), "b": str(b)},
                    include_zero=True,
                )
            )
    # base J^2_{1,1}
    base = instantiate("J^2_{1,1}", {})
    for b in nonzero:
        outputs.extend(
            _extensions_from_base(
                base, b, {"branch": "base J^2_{1,1}", "b": str(b)}, include_zero=True
            )
        )
    # base abelian dim 2, diagonal twist; the module twist sweep includes the
    # products a^2, ab, b^2 where the compatible-cochain case table branches
    for a in sample_a:
        for b in nonzero:
            base = Algebra.abelian(2, _diag(a, b))
            d_values = []
            for d in tuple(nonzero) + (a * a, a * b, b * b):
                if d != 0 and d not in d_values:
                    d_values.append(d)
            for d in d_values:
                outputs.extend(
                    _extensions_from_base(
                        base,
                        d,
                        {"branch": "abelian2-diagonal", "a": str(a), "b": str(b), "d": str(d)},
                        include_zero=False,
                    )
                )
    # base abelian dim 2, Jordan twist
    for a in sample_a:
        base = Algebra.abelian(2, _cols((a, ZERO), (ONE, a)))
        d_values = []
        for d in tuple(nonzero) + (a * a,):
            if d != 0 and d not in d_values:
                d_values.append(d)
        for d in d_values:
            outputs.extend(
                _extensions_from_base(
                    base,
                    d,
                    {"branch": "abelian2-jordan", "a": str(a), "d": str(d)},
                    include_zero=False,
                )
            )
    # module dimension 2 over the one-dimensional base: A^2 = 0 family
    outputs.extend(_classify3_vdim2(grid))
    # twist not preserving J: full Jordan block, normal form forced
    for x in nonzero:
        outputs.append(
            (
                _jordan_block_normal_form(3, {(2, 2): x}),
                {
                    "branch": "jordan-block-3",
                    "forced": "a=1, x11=0, x12=0 (multiplicativity residuals)",
                    "x22": str(x),
                },
            )
        )
    return [(alg, info) for alg, info in outputs if not alg.is_abelian()]


def _classify3_vdim2(grid) -> list:
    """dim V = 2 over the abelian one-dimensional base.  The action matrix
    must square to zero; the compatibility between the action twist and the
    module twist pins a = 1 for a nonzero action (the same a^3 - a^2
    obstruction the catalog records for the J^10/J^11 bullets)."""
    from .representations import a2zero_candidates, check_representation

    outputs = []
    base = _abelian1(ONE)
    beta = Matrix.diagonal([ONE, ONE])
    for x1, x2 in ((ZERO, ONE), (ONE, ONE), (ONE, QQ(2))):
        if x2 == 0:
            continue
        action = a2zero_candidates(x1, x2)
        rep = Representation(base, 2, (action,), beta)
        if not check_representation(rep).passed:
            continue
        h2 = compute_H2(rep)
        for theta in h2.representatives or (Cochain2.zero(rep),):
            built = build_extension(ExtensionSpec(base, rep, theta))
            outputs.append(
                (
                    built.algebra,
                    {
                        "branch": "vdim2-nilpotent",
                        "x1": str(x1),
                        "x2": str(x2),
                        "h2_dims": list(h2.dims),
                    },
                )
            )
    return outputs

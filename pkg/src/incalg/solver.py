"""Exact solution spaces of Der, JDer, GenDer and GenJDer over a field.

Each unknown map is flattened to ``dim(A)**2`` coefficients (image of basis
index ``p`` at component ``r``).  For the pair classes the ``xi`` unknowns
come first, then the ``tau`` unknowns.  The defining identities, instantiated
on basis elements, give a homogeneous linear system solved by Gauss-Jordan
elimination with positional pivoting.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import IncidenceAlgebra, LinearMap, linear_combination
from .errors import InputError, InvariantViolation
from .predicates import (
    GenPair,
    is_derivation,
    is_generalized_derivation,
    is_generalized_jordan_derivation,
    is_jordan_derivation,
)
from .ring import RingSpec

CLASSES = ("der", "jder", "gder", "gjder")
PAIR_CLASSES = ("gder", "gjder")


@dataclass
class ConstraintSystem:
    algebra: IncidenceAlgebra
    cls: str
    unknowns: list[str]
    rows: list[dict[int, object]]

    @property
    def ring(self) -> RingSpec:
        return self.algebra.ring

    @property
    def n_unknowns(self) -> int:
        return len(self.unknowns)


@dataclass
class SolutionSpace:
    algebra: IncidenceAlgebra
    cls: str
    vectors: list[list]
    basis: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    @property
    def is_pair(self) -> bool:
        return self.cls in PAIR_CLASSES

    def xi_projection_rank(self) -> int:
        """Dimension of the space of ``xi`` maps occurring in a solution."""
        if not self.is_pair:
            return self.dimension
        n2 = self.algebra.dim ** 2
        return rank([v[:n2] for v in self.vectors], self.algebra.ring)


# -- system construction -------------------------------------------------


class _Builder:
    """Symbolic images ``{component: {unknown: int coefficient}}``."""

    def __init__(self, algebra: IncidenceAlgebra):
        self.algebra = algebra
        self.basis = algebra.basis
        self.idx = algebra.index
        self.n = algebra.dim

    def image(self, offset: int, p):
        if p is None:
            return {}
        base = offset + self.idx[p] * self.n
        return {r: {base + k: 1} for k, r in enumerate(self.basis)}

    @staticmethod
    def times(S, q):
        u, v = q
        return {(x, v): c for (x, z), c in S.items() if z == u}

    @staticmethod
    def before(q, S):
        u, v = q
        return {(u, y): c for (z, y), c in S.items() if z == v}

    @staticmethod
    def combine(*terms):
        """Sum of ``(sign, symbolic image)`` terms, one row per component."""
        acc: dict = {}
        for sign, S in terms:
            for comp, lin in S.items():
                row = acc.setdefault(comp, {})
                for var, c in lin.items():
                    row[var] = row.get(var, 0) + sign * c
        rows = []
        for row in acc.values():
            row = {v: c for v, c in row.items() if c != 0}
            if row:
                rows.append(row)
        return rows


def _prod(p, q):
    return (p[0], q[1]) if p[1] == q[0] else None


def _leibniz_rows(B: _Builder, L: int, R: int) -> list:
    rows = []
    for p in B.basis:
        Lp = B.image(L, p)
        for q in B.basis:
            rows += B.combine(
                (1, B.image(L, _prod(p, q))),
                (-1, B.times(Lp, q)),
                (-1, B.before(p, B.image(R, q))),
            )
    return rows


def _jordan_rows(B: _Builder, L: int, R: int) -> list:
    rows = []
    basis = B.basis
    for k, p in enumerate(basis):
        Lp, Rp = B.image(L, p), B.image(R, p)
        rows += B.combine(
            (1, B.image(L, _prod(p, p))),
            (-1, B.times(Lp, p)),
            (-1, B.before(p, Rp)),
        )
        for q in basis[k + 1:]:
            Lq, Rq = B.image(L, q), B.image(R, q)
            rows += B.combine(
                (1, B.image(L, _prod(p, q))),
                (1, B.image(L, _prod(q, p))),
                (-1, B.times(Lp, q)),
                (-1, B.before(p, Rq)),
                (-1, B.times(Lq, p)),
                (-1, B.before(q, Rp)),
            )
    return rows


def build_system(algebra: IncidenceAlgebra, cls: str) -> ConstraintSystem:
    """Linear constraints whose solutions are exactly the maps of class ``cls``."""
    if cls not in CLASSES:
        raise InputError(f"unknown class {cls!r}; expected one of {', '.join(CLASSES)}")
    ring = algebra.ring
    if not ring.is_field:
        raise InputError(f"the solver needs a field, {ring} is not one")
    B = _Builder(algebra)
    n2 = algebra.dim ** 2
    names = [f"[{p[0]},{p[1]}]->[{r[0]},{r[1]}]" for p in algebra.basis for r in algebra.basis]
    if cls == "der":
        unknowns, raw = ["L" + s for s in names], _leibniz_rows(B, 0, 0)
    elif cls == "jder":
        unknowns, raw = ["L" + s for s in names], _jordan_rows(B, 0, 0)
    else:
        unknowns = ["xi" + s for s in names] + ["tau" + s for s in names]
        if cls == "gder":
            raw = _leibniz_rows(B, n2, n2) + _leibniz_rows(B, 0, n2)
        else:
            raw = _jordan_rows(B, n2, n2) + _jordan_rows(B, 0, n2)
    rows, seen = [], set()
    for row in raw:
        row = {v: ring.coerce(c) for v, c in sorted(row.items())}
        row = {v: c for v, c in row.items() if c != 0}
        key = tuple(row.items())
        if row and key not in seen:
            seen.add(key)
            rows.append(row)
    return ConstraintSystem(algebra, cls, unknowns, rows)


# -- elimination -----------------------------------------------------------


def rref(rows, ring: RingSpec) -> dict[int, dict[int, object]]:
    """Reduced row echelon form as ``{pivot column: row}`` (pivot entries are 1).

    Rows are taken in order; each is reduced against the current pivots and
    pivots on its lowest remaining column.
    """
    add, mul, neg, inv = ring.add, ring.mul, ring.neg, ring.inv
    pivots: dict[int, dict[int, object]] = {}
    for src in rows:
        r = {c: v for c, v in (src.items() if isinstance(src, dict) else enumerate(src)) if v != 0}
        for c in [c for c in r if c in pivots]:
            f = r.get(c)
            if not f:
                continue
            for cc, pv in pivots[c].items():
                s = add(r.get(cc, 0), neg(mul(f, pv)))
                if s == 0:
                    r.pop(cc, None)
                else:
                    r[cc] = s
        if not r:
            continue
        c = min(r)
        k = inv(r[c])
        r = {cc: mul(k, v) for cc, v in r.items()}
        for prow in pivots.values():
            f = prow.get(c)
            if not f:
                continue
            for cc, v in r.items():
                s = add(prow.get(cc, 0), neg(mul(f, v)))
                if s == 0:
                    prow.pop(cc, None)
                else:
                    prow[cc] = s
        pivots[c] = r
    return pivots


def rank(vectors, ring: RingSpec) -> int:
    return len(rref(vectors, ring))


def kernel_basis(rows, n_cols: int, ring: RingSpec) -> list[list]:
    """Standard kernel basis: one vector per free column, in column order."""
    pivots = rref(rows, ring)
    zero, one = ring.zero, ring.one
    out = []
    for f in range(n_cols):
        if f in pivots:
            continue
        v = [zero] * n_cols
        v[f] = one
        for c, row in pivots.items():
            if f in row:
                v[c] = ring.neg(row[f])
        out.append(v)
    return out


def _vector_to_solution(algebra: IncidenceAlgebra, cls: str, vec):
    if cls in PAIR_CLASSES:
        n2 = algebra.dim ** 2
        return GenPair(LinearMap.from_vector(algebra, vec[:n2]), LinearMap.from_vector(algebra, vec[n2:]))
    return LinearMap.from_vector(algebra, vec)


PREDICATES = {
    "der": is_derivation,
    "jder": is_jordan_derivation,
    "gder": is_generalized_derivation,
    "gjder": is_generalized_jordan_derivation,
}


def nullspace(system: ConstraintSystem, verify: bool = True) -> SolutionSpace:
    """Basis of the solutions of ``system``, each re-checked against its predicate."""
    alg = system.algebra
    vectors = kernel_basis(system.rows, system.n_unknowns, system.ring)
    space = SolutionSpace(alg, system.cls, vectors)
    space.basis = [_vector_to_solution(alg, system.cls, v) for v in vectors]
    if verify:
        check = PREDICATES[system.cls]
        for k, sol in enumerate(space.basis):
            report = check(sol)
            if not report.passed:
                raise InvariantViolation(
                    f"{system.cls} basis solution {k} fails its predicate: {report.witnesses[0]}"
                )
        if rank(vectors, system.ring) != len(vectors):
            raise InvariantViolation(f"{system.cls} basis is not linearly independent")
    return space


def solve(algebra: IncidenceAlgebra, cls: str, verify: bool = True) -> SolutionSpace:
    return nullspace(build_system(algebra, cls), verify=verify)


def sample_solution(space: SolutionSpace, coefficients):
    """Linear combination of the basis solutions with the given coefficients."""
    coefficients = list(coefficients)
    if len(coefficients) != space.dimension:
        raise InputError(f"expected {space.dimension} coefficients, got {len(coefficients)}")
    alg = space.algebra
    if space.is_pair:
        xi = linear_combination(alg, coefficients, [s.xi for s in space.basis])
        tau = linear_combination(alg, coefficients, [s.tau for s in space.basis])
        return GenPair(xi, tau)
    return linear_combination(alg, coefficients, space.basis)


def random_scalar(ring: RingSpec, rng: random.Random):
    """A raw random ring value; small numerators/denominators over Q."""
    if ring.kind == "Z/n":
        return rng.randrange(ring.modulus)
    num = rng.randint(-5, 5)
    if ring.kind == "Q":
        return Fraction(num, rng.randint(1, 4))
    return num


def random_sample(space: SolutionSpace, rng: random.Random):
    coeffs = [random_scalar(space.algebra.ring, rng) for _ in range(space.dimension)]
    return sample_solution(space, coeffs)


def compare_spaces(algebra: IncidenceAlgebra, spaces: dict | None = None) -> dict:
    """Dimensions of Der vs JDer and of the xi-projections of GenDer vs GenJDer."""
    spaces = spaces if spaces is not None else {c: solve(algebra, c) for c in CLASSES}
    report = {
        "ring": str(algebra.ring),
        "algebra_dim": algebra.dim,
        "der": spaces["der"].dimension,
        "jder": spaces["jder"].dimension,
        "gder": spaces["gder"].dimension,
        "gjder": spaces["gjder"].dimension,
        "gder_xi": spaces["gder"].xi_projection_rank(),
        "gjder_xi": spaces["gjder"].xi_projection_rank(),
    }
    report["der_equals_jder"] = report["der"] == report["jder"]
    report["gder_xi_equals_gjder_xi"] = report["gder_xi"] == report["gjder_xi"]
    report["gder_equals_dimA_plus_der"] = report["gder"] == algebra.dim + report["der"]
    return report

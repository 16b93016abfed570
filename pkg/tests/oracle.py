"""Independent reference computations used to freeze expected values.

Nothing here touches incalg's algebra, predicates or solver: elements are
dense n x n matrices (the incidence algebra sits inside the full matrix
algebra with the same product) and solution-space dimensions come from the
rank of the identity's defect map, evaluated on elementary maps.
"""
from fractions import Fraction
import itertools

import sympy


def comparable(elements, leq):
    return [(x, y) for x in elements for y in elements if (x, y) in leq]


class DenseModel:
    def __init__(self, elements, leq, p=None):
        self.elements = list(elements)
        self.pos = {x: i for i, x in enumerate(self.elements)}
        self.basis = comparable(self.elements, leq)
        self.n = len(self.elements)
        self.p = p

    def red(self, v):
        return v % self.p if self.p else v

    def unit(self, pair):
        m = [[0] * self.n for _ in range(self.n)]
        m[self.pos[pair[0]]][self.pos[pair[1]]] = 1
        return m

    def mul(self, a, b):
        n = self.n
        return [[self.red(sum(a[i][k] * b[k][j] for k in range(n))) for j in range(n)] for i in range(n)]

    def add(self, *ms):
        n = self.n
        return [[self.red(sum(m[i][j] for m in ms)) for j in range(n)] for i in range(n)]

    def neg(self, a):
        return [[self.red(-v) for v in row] for row in a]

    def flat(self, m):
        return [m[self.pos[x]][self.pos[y]] for x, y in self.basis]

    def apply(self, images, m):
        """Apply the map given by ``images`` (one matrix per basis pair) to ``m``."""
        out = [[0] * self.n for _ in range(self.n)]
        for b, img in zip(self.basis, images):
            c = m[self.pos[b[0]]][self.pos[b[1]]]
            if c:
                out = self.add(out, [[c * v for v in row] for row in img])
        return out

    def elementary_maps(self):
        """Unit maps e_p -> e_r, ordered (p, r), as lists of image matrices."""
        zero = [[0] * self.n for _ in range(self.n)]
        for p in range(len(self.basis)):
            for r in self.basis:
                images = [zero] * len(self.basis)
                images[p] = self.unit(r)
                yield images


def defect_rows(model, cls, L, R):
    """Flattened defects of the defining identity for maps L (and relating R)."""
    U = [model.unit(b) for b in model.basis]
    out = []
    if cls in ("der", "gder"):
        for a, b in itertools.product(U, repeat=2):
            lhs = model.apply(L, model.mul(a, b))
            rhs = model.add(model.mul(model.apply(L, a), b), model.mul(a, model.apply(R, b)))
            out += model.flat(model.add(lhs, model.neg(rhs)))
    else:
        for a in U:
            lhs = model.apply(L, model.mul(a, a))
            rhs = model.add(model.mul(model.apply(L, a), a), model.mul(a, model.apply(R, a)))
            out += model.flat(model.add(lhs, model.neg(rhs)))
        for i, a in enumerate(U):
            for b in U[i + 1:]:
                lhs = model.apply(L, model.add(model.mul(a, b), model.mul(b, a)))
                rhs = model.add(
                    model.mul(model.apply(L, a), b), model.mul(a, model.apply(R, b)),
                    model.mul(model.apply(L, b), a), model.mul(b, model.apply(R, a)),
                )
                out += model.flat(model.add(lhs, model.neg(rhs)))
    return out


def dense_rank_mod(rows, p):
    rows = [[v % p for v in r] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def solution_dimension(elements, leq, cls, p=None):
    """dim of {maps of class cls}: unknowns minus rank of the defect operator."""
    model = DenseModel(elements, leq, p)
    n = len(model.basis)
    zero = [[0] * model.n for _ in range(model.n)]
    columns = []
    if cls in ("der", "jder"):
        for E in model.elementary_maps():
            columns.append(defect_rows(model, cls, E, E))
    else:
        base = "der" if cls == "gder" else "jder"
        Z = [zero] * n
        for E in model.elementary_maps():       # xi unknowns
            columns.append(defect_rows(model, base, Z, Z) + defect_rows(model, cls, E, Z))
        for E in model.elementary_maps():       # tau unknowns
            columns.append(defect_rows(model, base, E, E) + defect_rows(model, cls, Z, E))
    rows = [list(r) for r in zip(*columns)]
    if p:
        r = dense_rank_mod(rows, p)
    else:
        r = sympy.Matrix(rows).rank() if rows else 0
    return len(columns) - r


def brute_force_derivation_count(elements, leq, p):
    """Number of derivations over GF(p) by enumerating every linear map."""
    model = DenseModel(elements, leq, p)
    U = [model.unit(b) for b in model.basis]
    units = [model.unit(b) for b in model.basis]
    n = len(U)
    count = 0
    for coeffs in itertools.product(range(p), repeat=n * n):
        images = []
        for i in range(n):
            img = [[0] * model.n for _ in range(model.n)]
            for j in range(n):
                c = coeffs[i * n + j]
                if c:
                    img = model.add(img, [[c * v for v in row] for row in units[j]])
            images.append(img)
        ok = True
        for a, b in itertools.product(U, repeat=2):
            lhs = model.apply(images, model.mul(a, b))
            rhs = model.add(model.mul(model.apply(images, a), b), model.mul(a, model.apply(images, b)))
            if lhs != rhs:
                ok = False
                break
        count += ok
    return count


def convolution_by_definition(elements, leq, f, g):
    """(fg)(x, y) = sum over x <= z <= y, with f, g as {(x, y): Fraction} dicts."""
    out = {}
    for x, y in comparable(elements, leq):
        s = Fraction(0)
        for z in elements:
            if (x, z) in leq and (z, y) in leq:
                s += f.get((x, z), 0) * g.get((z, y), 0)
        if s:
            out[(x, y)] = s
    return out

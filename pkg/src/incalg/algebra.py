"""Incidence algebras I(X, R) of finite preorders, their elements and R-linear maps.

Elements are sparse maps from comparable pairs ``(x, y)`` to nonzero raw
ring values.  Linear maps are stored by the images of the basis elements
``e_xy``.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Mapping

from .errors import InputError
from .preorder import Preorder
from .ring import RingSpec, Scalar

Pair = tuple[str, str]


class IncidenceAlgebra:
    """The algebra I(X, R) for a finite preorder X and an exact ring R."""

    def __init__(self, preorder: Preorder, ring: RingSpec):
        self.preorder = preorder
        self.ring = ring

    def __eq__(self, other):
        return (
            isinstance(other, IncidenceAlgebra)
            and self.ring == other.ring
            and self.preorder == other.preorder
        )

    def __hash__(self):
        return hash((self.preorder, self.ring))

    def __repr__(self):
        return f"IncidenceAlgebra({len(self.preorder)} points, {self.ring})"

    @cached_property
    def basis(self) -> tuple[Pair, ...]:
        return self.preorder.pairs

    @cached_property
    def index(self) -> dict[Pair, int]:
        return {b: k for k, b in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def check_same(self, other: IncidenceAlgebra) -> None:
        if other is not self and other != self:
            raise InputError(f"algebra mismatch: {self} vs {other}")

    def element(self, coeffs: Mapping | Iterable = ()) -> IncidenceElement:
        """Element from ``{(x, y): value}``; values may be ints, Fractions, strings or Scalars."""
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        ring = self.ring
        out: dict[Pair, object] = {}
        for (x, y), v in items:
            key = (str(x), str(y))
            if key not in self.index:
                raise InputError(f"({key[0]!r}, {key[1]!r}) is not a comparable pair")
            v = ring.coerce(v)
            if key in out:
                v = ring.add(out[key], v)
            out[key] = v
        return IncidenceElement(self, {k: v for k, v in out.items() if v != 0})

    def zero(self) -> IncidenceElement:
        return IncidenceElement(self, {})

    def identity(self) -> IncidenceElement:
        """The Kronecker delta: coefficient 1 exactly on the diagonal pairs."""
        one = self.ring.one
        return IncidenceElement(self, {(x, x): one for x in self.preorder.elements})

    def e(self, x, y) -> IncidenceElement:
        """Basis element ``e_xy``."""
        key = (str(x), str(y))
        if key not in self.index:
            raise InputError(f"({key[0]!r}, {key[1]!r}) is not a comparable pair")
        return IncidenceElement(self, {key: self.ring.one})

    def zeta(self) -> IncidenceElement:
        one = self.ring.one
        return IncidenceElement(self, {b: one for b in self.basis})

    def zero_map(self) -> LinearMap:
        return LinearMap(self, {})

    def identity_map(self) -> LinearMap:
        return LinearMap(self, {b: self.e(*b) for b in self.basis})


class IncidenceElement:
    """A finitely supported function on comparable pairs; immutable by convention."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: IncidenceAlgebra, coeffs: dict[Pair, object]):
        # Trusted constructor: keys must be comparable pairs, values canonical and nonzero.
        self.algebra = algebra
        self.coeffs = coeffs

    @property
    def ring(self) -> RingSpec:
        return self.algebra.ring

    def __getitem__(self, pair: Pair):
        return self.coeffs.get(pair, self.algebra.ring.zero)

    def scalar_at(self, x, y) -> Scalar:
        return Scalar(self.ring, self[(str(x), str(y))])

    def support(self) -> list[Pair]:
        idx = self.algebra.index
        return sorted(self.coeffs, key=idx.__getitem__)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        fmt = self.ring.format_value
        return " + ".join(f"{fmt(self.coeffs[p])}*e[{p[0]},{p[1]}]" for p in self.support())

    def _same(self, other: IncidenceElement) -> None:
        if not isinstance(other, IncidenceElement):
            raise InputError(f"expected an incidence element, got {type(other).__name__}")
        self.algebra.check_same(other.algebra)

    def __add__(self, other: IncidenceElement) -> IncidenceElement:
        self._same(other)
        ring = self.ring
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = ring.add(out[k], v) if k in out else v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return IncidenceElement(self.algebra, out)

    def __neg__(self) -> IncidenceElement:
        neg = self.ring.neg
        return IncidenceElement(self.algebra, {k: neg(v) for k, v in self.coeffs.items()})

    def __sub__(self, other: IncidenceElement) -> IncidenceElement:
        return self + (-other)

    def scale(self, r) -> IncidenceElement:
        ring = self.ring
        r = ring.coerce(r)
        if r == 0:
            return IncidenceElement(self.algebra, {})
        out = {}
        for k, v in self.coeffs.items():
            s = ring.mul(r, v)
            if s != 0:
                out[k] = s
        return IncidenceElement(self.algebra, out)

    def __rmul__(self, r):
        return self.scale(r)

    def __mul__(self, other):
        if isinstance(other, IncidenceElement):
            return convolve(self, other)
        return self.scale(other)

    def rows(self) -> dict[str, list[tuple[str, object]]]:
        """Support grouped by first coordinate: ``rows[x] = [(y, f(x, y)), ...]``."""
        out: dict[str, list] = {}
        for (x, y), v in self.coeffs.items():
            out.setdefault(x, []).append((y, v))
        return out

    def times_basis(self, u: str, v: str) -> IncidenceElement:
        """``self * e_uv``: column ``u`` moved to column ``v``."""
        return IncidenceElement(
            self.algebra, {(x, v): c for (x, z), c in self.coeffs.items() if z == u}
        )

    def basis_times(self, u: str, v: str) -> IncidenceElement:
        """``e_uv * self``: row ``v`` moved to row ``u``."""
        return IncidenceElement(
            self.algebra, {(u, y): c for (z, y), c in self.coeffs.items() if z == v}
        )


def convolve(f: IncidenceElement, g: IncidenceElement) -> IncidenceElement:
    """Convolution ``(fg)(x, y) = sum over x <= z <= y of f(x, z) g(z, y)``."""
    f._same(g)
    ring = f.ring
    add, mul = ring.add, ring.mul
    grows = g.rows()
    out: dict[Pair, object] = {}
    for (x, z), a in f.coeffs.items():
        for y, b in grows.get(z, ()):
            key = (x, y)
            p = mul(a, b)
            out[key] = add(out[key], p) if key in out else p
    return IncidenceElement(f.algebra, {k: v for k, v in out.items() if v != 0})


def add(f: IncidenceElement, g: IncidenceElement) -> IncidenceElement:
    return f + g


def scale(r, f: IncidenceElement) -> IncidenceElement:
    return f.scale(r)


def identity(algebra: IncidenceAlgebra) -> IncidenceElement:
    return algebra.identity()


class LinearMap:
    """An R-linear endomorphism of I(X, R) given by the images of the basis.

    Indices missing from ``images`` map to zero, so every basis index has an
    image.
    """

    __slots__ = ("algebra", "_images")

    def __init__(self, algebra: IncidenceAlgebra, images: Mapping[Pair, IncidenceElement]):
        self.algebra = algebra
        clean = {}
        for b, img in images.items():
            b = (str(b[0]), str(b[1]))
            if b not in algebra.index:
                raise InputError(f"({b[0]!r}, {b[1]!r}) is not a basis index")
            algebra.check_same(img.algebra)
            if img.coeffs:
                clean[b] = img
        self._images = clean

    @property
    def ring(self) -> RingSpec:
        return self.algebra.ring

    def image(self, x, y) -> IncidenceElement:
        key = (str(x), str(y))
        if key not in self.algebra.index:
            raise InputError(f"({key[0]!r}, {key[1]!r}) is not a basis index")
        return self._images.get(key) or self.algebra.zero()

    def __getitem__(self, pair: Pair) -> IncidenceElement:
        return self._images.get(pair) or self.algebra.zero()

    @property
    def images(self) -> dict[Pair, IncidenceElement]:
        """Total map basis index -> image, in basis order."""
        return {b: self[b] for b in self.algebra.basis}

    def __call__(self, f: IncidenceElement) -> IncidenceElement:
        return apply(self, f)

    def is_zero(self) -> bool:
        return not self._images

    def support(self) -> list[Pair]:
        idx = self.algebra.index
        return sorted(self._images, key=idx.__getitem__)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.algebra == other.algebra and self._images == other._images

    def __hash__(self):
        return hash(frozenset((b, img) for b, img in self._images.items()))

    def __repr__(self):
        body = ", ".join(f"e[{b[0]},{b[1]}] -> {self._images[b]!r}" for b in self.support())
        return f"LinearMap({body})"

    def _same(self, other: LinearMap) -> None:
        if not isinstance(other, LinearMap):
            raise InputError(f"expected a linear map, got {type(other).__name__}")
        self.algebra.check_same(other.algebra)

    def __add__(self, other: LinearMap) -> LinearMap:
        return map_add(self, other)

    def __sub__(self, other: LinearMap) -> LinearMap:
        return map_sub(self, other)

    def __neg__(self) -> LinearMap:
        return LinearMap(self.algebra, {b: -img for b, img in self._images.items()})

    def scale(self, r) -> LinearMap:
        return map_scale(r, self)

    def to_vector(self) -> list:
        """Flatten as ``[image(b)[c] for b in basis for c in basis]``."""
        zero = self.ring.zero
        out = []
        for b in self.algebra.basis:
            img = self._images.get(b)
            coeffs = img.coeffs if img is not None else {}
            out.extend(coeffs.get(c, zero) for c in self.algebra.basis)
        return out

    @classmethod
    def from_vector(cls, algebra: IncidenceAlgebra, vector) -> LinearMap:
        basis = algebra.basis
        n = len(basis)
        if len(vector) != n * n:
            raise InputError(f"vector of length {len(vector)} does not describe a map on a {n}-dimensional algebra")
        images = {}
        for i, b in enumerate(basis):
            coeffs = {c: vector[i * n + j] for j, c in enumerate(basis) if vector[i * n + j] != 0}
            if coeffs:
                images[b] = IncidenceElement(algebra, coeffs)
        return cls(algebra, images)


def apply(L: LinearMap, f: IncidenceElement) -> IncidenceElement:
    """Linear extension: ``L(f) = sum of f(b) * L(e_b)`` over the support of ``f``."""
    L.algebra.check_same(f.algebra)
    ring = L.ring
    add, mul = ring.add, ring.mul
    out: dict[Pair, object] = {}
    for b, coef in f.coeffs.items():
        img = L._images.get(b)
        if img is None:
            continue
        for k, v in img.coeffs.items():
            p = mul(coef, v)
            out[k] = add(out[k], p) if k in out else p
    return IncidenceElement(L.algebra, {k: v for k, v in out.items() if v != 0})


def left_multiplication(c: IncidenceElement) -> LinearMap:
    """The map ``f -> c * f``."""
    alg = c.algebra
    return LinearMap(alg, {b: c.times_basis(*b) for b in alg.basis})


def right_multiplication(c: IncidenceElement) -> LinearMap:
    alg = c.algebra
    return LinearMap(alg, {b: c.basis_times(*b) for b in alg.basis})


def inner_derivation(f: IncidenceElement) -> LinearMap:
    """``ad(f): a -> f a - a f``."""
    return map_sub(left_multiplication(f), right_multiplication(f))


def map_add(L: LinearMap, M: LinearMap) -> LinearMap:
    L._same(M)
    images = dict(L._images)
    for b, img in M._images.items():
        images[b] = images[b] + img if b in images else img
    return LinearMap(L.algebra, images)


def map_sub(L: LinearMap, M: LinearMap) -> LinearMap:
    L._same(M)
    return map_add(L, -M)


def map_scale(r, L: LinearMap) -> LinearMap:
    return LinearMap(L.algebra, {b: img.scale(r) for b, img in L._images.items()})


def linear_combination(algebra: IncidenceAlgebra, coefficients, maps) -> LinearMap:
    out = algebra.zero_map()
    for r, L in zip(coefficients, maps):
        out = map_add(out, map_scale(r, L))
    return out

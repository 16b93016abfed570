"""Constructive decomposition of a generalized Jordan derivation.

Given a pair ``(xi, tau)`` this module builds the map

    phi(e_ij) = xi(e_ii) e_ij + e_ii tau(e_ij)

extracts the relating derivation ``d`` of ``xi`` and certifies that
``psi = xi - phi`` vanishes, i.e. that ``xi`` is a generalized derivation
with relating derivation ``d``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import IncidenceElement, LinearMap, left_multiplication, map_sub
from .errors import HypothesisError, InputError
from .predicates import (
    GenPair,
    IdentityReport,
    is_derivation,
    is_generalized_derivation,
    is_generalized_jordan_derivation,
    is_jordan_derivation,
    verify_generalized_leibniz,
)


@dataclass
class CRelationReport:
    """Instances of the additivity relations among the tau-coefficients."""

    instances: list[tuple[str, tuple[str, ...], object, object, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for *_, ok in self.instances)

    @property
    def failures(self) -> list:
        return [inst for inst in self.instances if not inst[-1]]


@dataclass
class DecompositionCertificate:
    pair: GenPair
    phi: LinearMap
    d: LinearMap
    psi: LinearMap
    d_from_tau: LinearMap
    checks: dict[str, IdentityReport]
    c_relations: CRelationReport

    @property
    def verdict(self) -> bool:
        return self.c_relations.passed and all(r.passed for r in self.checks.values())


def _require_torsion_free(ring) -> None:
    if not ring.is_two_torsion_free:
        raise HypothesisError(f"{ring} is not 2-torsion free")


def build_phi(p: GenPair, validate: bool = True) -> LinearMap:
    """``phi(e_ij) = xi(e_ii) e_ij + e_ii tau(e_ij)`` for every comparable pair."""
    alg = p.algebra
    _require_torsion_free(alg.ring)
    if validate:
        report = is_generalized_jordan_derivation(p)
        if not report.passed:
            raise InputError(f"not a generalized Jordan derivation pair: {report.witnesses[0]}")
    xi, tau = p.xi, p.tau
    images = {}
    for i, j in alg.basis:
        images[(i, j)] = xi[(i, i)].times_basis(i, j) + tau[(i, j)].basis_times(i, i)
    return LinearMap(alg, images)


def extract_relating_derivation(xi: LinearMap) -> LinearMap:
    """The only possible relating map: ``xi - (left multiplication by xi(identity))``."""
    alg = xi.algebra
    return map_sub(xi, left_multiplication(xi(alg.identity())))


def strip_reverse_components(tau: LinearMap, validate: bool = True) -> LinearMap:
    """Drop the ``e_ji`` component of ``tau(e_ij)`` for equivalent ``i != j``.

    On partial orders this returns ``tau`` unchanged.
    """
    alg = tau.algebra
    _require_torsion_free(alg.ring)
    if validate:
        report = is_jordan_derivation(tau)
        if not report.passed:
            raise InputError(f"tau is not a Jordan derivation: {report.witnesses[0]}")
    images = {}
    for i, j in alg.basis:
        img = tau[(i, j)]
        if i != j and (j, i) in img.coeffs:
            img = IncidenceElement(alg, {k: v for k, v in img.coeffs.items() if k != (j, i)})
        images[(i, j)] = img
    return LinearMap(alg, images)


def verify_c_relations(tau: LinearMap, validate: bool = True) -> CRelationReport:
    """Coefficient relations of a Jordan derivation, read off from its images.

    * ``tau(e_jj)[j,k] + tau(e_kk)[j,k] = 0`` for comparable ``j != k``;
    * ``tau(e_ij)[i,j] + tau(e_jk)[j,k] = tau(e_ik)[i,k]`` on strict chains
      ``i < j < k`` of pairwise non-equivalent elements;
    * ``tau(e_ii)[i,i] = 0``.
    """
    alg = tau.algebra
    ring = alg.ring
    _require_torsion_free(ring)
    if validate:
        report = is_jordan_derivation(tau)
        if not report.passed:
            raise InputError(f"tau is not a Jordan derivation: {report.witnesses[0]}")
    P = alg.preorder
    out = CRelationReport()
    zero = ring.zero
    for j, k in alg.basis:
        if j == k:
            continue
        lhs = ring.add(tau[(j, j)][(j, k)], tau[(k, k)][(j, k)])
        out.instances.append(("idempotent-sum", (j, k), lhs, zero, lhs == zero))
    for i in P.elements:
        for j in P.strict_up_set(i):
            for k in P.strict_up_set(j):
                lhs = ring.add(tau[(i, j)][(i, j)], tau[(j, k)][(j, k)])
                rhs = tau[(i, k)][(i, k)]
                out.instances.append(("additivity", (i, j, k), lhs, rhs, lhs == rhs))
    for i in P.elements:
        lhs = tau[(i, i)][(i, i)]
        out.instances.append(("diagonal", (i,), lhs, zero, lhs == zero))
    return out


def _zero_report(name: str, L: LinearMap) -> IdentityReport:
    report = IdentityReport(name)
    zero = L.algebra.zero()
    for b in L.algebra.basis:
        report.record(name, (f"e[{b[0]},{b[1]}]",), L[b], zero)
    return report


def _equal_report(name: str, L: LinearMap, M: LinearMap) -> IdentityReport:
    report = IdentityReport(name)
    for b in L.algebra.basis:
        report.record(name, (f"e[{b[0]},{b[1]}]",), L[b], M[b])
    return report


def certify(p: GenPair) -> DecompositionCertificate:
    """Decompose ``p.xi`` as the generalized derivation ``phi`` and certify ``xi = phi``.

    Raises :class:`HypothesisError` when the ring is not 2-torsion free and
    :class:`InputError` when ``p`` is not a generalized Jordan derivation
    pair.  Any failed check under valid hypotheses is reported through the
    certificate's verdict together with witnesses.
    """
    alg = p.algebra
    _require_torsion_free(alg.ring)
    gj = is_generalized_jordan_derivation(p)
    if not gj.passed:
        raise InputError(f"not a generalized Jordan derivation pair: {gj.witnesses[0]}")
    xi, tau = p.xi, p.tau
    phi = build_phi(p, validate=False)
    psi = map_sub(xi, phi)
    d = extract_relating_derivation(xi)
    d_tau = strip_reverse_components(tau, validate=False)

    diag = IdentityReport("phi-diagonal")
    for i in alg.preorder.elements:
        diag.record("phi(e_ii)=xi(e_ii)", (f"e[{i},{i}]",), phi[(i, i)], xi[(i, i)])

    checks = {
        "gjder-input": gj,
        "phi-diagonal": diag,
        "psi-zero": _zero_report("psi-zero", psi),
        "d-is-derivation": is_derivation(d),
        "xi-gder-with-d": is_generalized_derivation(GenPair(xi, d)),
        "generalized-leibniz": verify_generalized_leibniz(phi, d),
        "route-agreement": _equal_report("route-agreement", d, d_tau),
    }
    c_rel = verify_c_relations(tau, validate=False)
    return DecompositionCertificate(p, phi, d, psi, d_tau, checks, c_rel)

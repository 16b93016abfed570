"""JSON documents: posets, elements, linear maps, reports and certificates."""
from __future__ import annotations

import json
from pathlib import Path

from .algebra import IncidenceAlgebra, IncidenceElement, LinearMap
from .errors import InputError
from .preorder import Preorder, load_preorder
from .ring import RingSpec

SCHEMA = "incalg/1"


def read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise InputError(f"{path}: file not found") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def read_poset(path) -> Preorder:
    data = read_json(path)
    try:
        return load_preorder(data)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def element_to_json(f: IncidenceElement) -> list:
    fmt = f.ring.format_value
    return [[x, y, fmt(f.coeffs[(x, y)])] for x, y in f.support()]


def element_from_json(algebra: IncidenceAlgebra, terms) -> IncidenceElement:
    if not isinstance(terms, list):
        raise InputError("an element must be a list of [x, y, coefficient] triples")
    items = []
    for t in terms:
        if not isinstance(t, list) or len(t) != 3:
            raise InputError(f"bad element term {t!r}; expected [x, y, coefficient]")
        x, y, c = t
        items.append(((str(x), str(y)), str(c)))
    return algebra.element(items)


def map_to_json(L: LinearMap) -> dict:
    return {
        "ring": str(L.ring),
        "images": [
            {"from": [b[0], b[1]], "to": element_to_json(L[b])} for b in L.support()
        ],
    }


def map_from_json(algebra: IncidenceAlgebra, doc) -> LinearMap:
    """Parse a linear-map document; omitted basis indices map to zero."""
    if not isinstance(doc, dict) or not isinstance(doc.get("images", []), list):
        raise InputError("a linear map document needs an 'images' list")
    if "ring" in doc and RingSpec.parse(doc["ring"]) != algebra.ring:
        raise InputError(f"map is over {doc['ring']} but the algebra is over {algebra.ring}")
    images = {}
    for entry in doc.get("images", []):
        try:
            x, y = entry["from"]
            to = entry.get("to", [])
        except (KeyError, TypeError, ValueError):
            raise InputError(f"bad image entry {entry!r}") from None
        key = (str(x), str(y))
        if key in images:
            raise InputError(f"duplicate image for ({key[0]!r}, {key[1]!r})")
        images[key] = element_from_json(algebra, to)
    return LinearMap(algebra, images)


def read_map(path, algebra: IncidenceAlgebra) -> LinearMap:
    data = read_json(path)
    try:
        return map_from_json(algebra, data)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def report_to_json(report) -> dict:
    """IdentityReport or CRelationReport as a JSON object."""
    if hasattr(report, "instances"):
        return {
            "name": "c-relations",
            "passed": report.passed,
            "checked": len(report.instances),
            "failures": [
                {"relation": kind, "indices": list(idx), "lhs": str(lhs), "rhs": str(rhs)}
                for kind, idx, lhs, rhs, _ in report.failures
            ],
        }
    doc = {
        "name": report.name,
        "passed": report.passed,
        "checked": report.checked,
        "failure_count": report.failures,
        "witnesses": [
            {
                "identity": w.identity,
                "inputs": list(w.inputs),
                "lhs": element_to_json(w.lhs),
                "rhs": element_to_json(w.rhs),
            }
            for w in report.witnesses
        ],
    }
    if report.info:
        doc["info"] = dict(report.info)
    return doc


def certificate_to_json(cert) -> dict:
    return {
        "schema": SCHEMA,
        "ring": str(cert.phi.ring),
        "verdict": cert.verdict,
        "phi": map_to_json(cert.phi),
        "d": map_to_json(cert.d),
        "d_from_tau": map_to_json(cert.d_from_tau),
        "psi": map_to_json(cert.psi),
        "checks": {name: report_to_json(r) for name, r in cert.checks.items()},
        "c_relations": report_to_json(cert.c_relations),
    }


def space_to_json(space) -> dict:
    basis = []
    for sol in space.basis:
        if space.is_pair:
            basis.append({"xi": map_to_json(sol.xi), "tau": map_to_json(sol.tau)})
        else:
            basis.append(map_to_json(sol))
    return {
        "schema": SCHEMA,
        "class": space.cls,
        "ring": str(space.algebra.ring),
        "dimension": space.dimension,
        "basis": basis,
    }

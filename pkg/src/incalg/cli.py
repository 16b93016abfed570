"""Command line front end.

Exit codes: 0 when every mathematical check passes, 1 on a mathematical
failure, 2 on input errors (bad files, bad rings, unmet hypotheses).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import serialize
from .algebra import IncidenceAlgebra
from .decomposition import certify, extract_relating_derivation
from .errors import InputError, InvariantViolation
from .experiments import DEFAULT_SAMPLES, DEFAULT_SEED, torsion_search, verify_theorem
from .predicates import CHECKS, GenPair
from .preorder import closure, enumerate_preorders, sweep_posets
from .ring import RingSpec
from .solver import CLASSES, solve

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    subcommand: str
    poset: Path | None = None
    rings: list[str] = field(default_factory=lambda: ["Q"])
    xi: Path | None = None
    tau: Path | None = None
    cls: str | None = None
    out: Path | None = None
    dump: Path | None = None
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    max_poset_size: int | None = None
    summary: bool = False


def _emit(doc: dict, out: Path | None) -> None:
    text = serialize.dumps(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _ring(cfg: RunConfig) -> RingSpec:
    if len(cfg.rings) != 1:
        raise InputError(f"{cfg.subcommand} takes exactly one --ring")
    return RingSpec.parse(cfg.rings[0])


def _need(value, flag: str):
    if value is None:
        raise InputError(f"missing required option {flag}")
    return value


def _cases(cfg: RunConfig):
    if cfg.poset is not None:
        return [(cfg.poset.stem, serialize.read_poset(cfg.poset))]
    if cfg.max_poset_size is not None:
        cases = []
        for n in range(0, cfg.max_poset_size + 1):
            for k, p in enumerate(enumerate_preorders(n)):
                cases.append((f"n{n}-{k}", p))
        return cases
    return sweep_posets()


def cmd_closure(cfg: RunConfig) -> int:
    p = serialize.read_poset(_need(cfg.poset, "--poset"))
    doc = {"schema": serialize.SCHEMA, **p.to_json(), "partial_order": p.is_partial_order()}
    _emit(doc, cfg.out)
    return EXIT_OK


def cmd_basis(cfg: RunConfig) -> int:
    p = serialize.read_poset(_need(cfg.poset, "--poset"))
    alg = IncidenceAlgebra(p, _ring(cfg))
    doc = {
        "schema": serialize.SCHEMA,
        "ring": str(alg.ring),
        "dimension": alg.dim,
        "basis": [list(b) for b in alg.basis],
        "strict_down_sets": {x: p.strict_down_set(x) for x in p.elements},
        "strict_up_sets": {x: p.strict_up_set(x) for x in p.elements},
    }
    _emit(doc, cfg.out)
    return EXIT_OK


def cmd_solve(cfg: RunConfig) -> int:
    p = serialize.read_poset(_need(cfg.poset, "--poset"))
    cls = _need(cfg.cls, "--class")
    if cls not in CLASSES:
        raise InputError(f"solve --class must be one of {', '.join(CLASSES)}")
    alg = IncidenceAlgebra(p, _ring(cfg))
    space = solve(alg, cls)
    doc = {
        "schema": serialize.SCHEMA,
        "class": cls,
        "ring": str(alg.ring),
        "dimension": space.dimension,
        "xi_projection_rank": space.xi_projection_rank(),
    }
    if cfg.dump is not None:
        cfg.dump.write_text(serialize.dumps(serialize.space_to_json(space)))
    _emit(doc, cfg.out)
    return EXIT_OK


def _load_maps(cfg: RunConfig):
    p = serialize.read_poset(_need(cfg.poset, "--poset"))
    alg = IncidenceAlgebra(p, _ring(cfg))
    xi = serialize.read_map(_need(cfg.xi, "--xi"), alg)
    tau = serialize.read_map(cfg.tau, alg) if cfg.tau is not None else None
    return alg, xi, tau


def cmd_check(cfg: RunConfig) -> int:
    cls = _need(cfg.cls, "--class")
    if cls not in CHECKS:
        raise InputError(f"check --class must be one of {', '.join(CHECKS)}")
    alg, xi, tau = _load_maps(cfg)
    if tau is None:
        # Without an explicit relating map use the only possible candidate.
        tau = extract_relating_derivation(xi) if cls in ("gder", "gjder", "lemma1", "basis-ids") else xi
    report = CHECKS[cls](xi, tau)
    doc = {"schema": serialize.SCHEMA, "class": cls, "ring": str(alg.ring),
           **serialize.report_to_json(report)}
    _emit(doc, cfg.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_decompose(cfg: RunConfig) -> int:
    alg, xi, tau = _load_maps(cfg)
    tau = _need(tau, "--tau")
    cert = certify(GenPair(xi, tau))
    _emit(serialize.certificate_to_json(cert), cfg.out)
    return EXIT_OK if cert.verdict else EXIT_FAIL


def cmd_verify_theorem(cfg: RunConfig) -> int:
    rings = [RingSpec.parse(r) for r in cfg.rings]
    for ring in rings:
        if not ring.is_two_torsion_free:
            raise InputError(f"{ring} is not 2-torsion free; run torsion-search to explore it")
    report = verify_theorem(_cases(cfg), rings, seed=cfg.seed, samples=cfg.samples)
    _emit({"schema": serialize.SCHEMA, **report}, cfg.out)
    if cfg.summary:
        for case in report["cases"]:
            status = "PASS" if case["passed"] else "FAIL"
            d = case["dimensions"]
            print(f"{status} {case['case']:>16} {case['ring']:>4}  dim A={d['algebra_dim']} "
                  f"Der={d['der']} JDer={d['jder']} GenJDer={d['gjder']} "
                  f"certified {case['certified']}/{case['certificates']}", file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_torsion_search(cfg: RunConfig) -> int:
    cases = _cases(cfg)
    if cfg.poset is None and cfg.max_poset_size is None:
        cases = [("empty", closure([]))] + cases
    report = torsion_search(cases, _ring(cfg))
    _emit({"schema": serialize.SCHEMA, **report}, cfg.out)
    if cfg.summary:
        for case in report["cases"]:
            d = case["dimensions"]
            print(f"{case['case']:>16}  Der={d['der']} JDer={d['jder']} "
                  f"GenDer_xi={d['gder_xi']} GenJDer_xi={d['gjder_xi']}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "closure": cmd_closure,
    "basis": cmd_basis,
    "solve": cmd_solve,
    "check": cmd_check,
    "decompose": cmd_decompose,
    "verify-theorem": cmd_verify_theorem,
    "torsion-search": cmd_torsion_search,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="incalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, help, poset=True):
        sp = sub.add_parser(name, help=help)
        if poset:
            sp.add_argument("--poset", type=Path, required=True)
        sp.add_argument("--out", type=Path)
        return sp

    add("closure", "reflexive-transitive closure of a poset file")
    add("basis", "basis of the incidence algebra").add_argument("--ring", dest="rings", action="append")

    sp = add("solve", "solution space of a derivation class")
    sp.add_argument("--ring", dest="rings", action="append")
    sp.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    sp.add_argument("--dump", type=Path)

    sp = add("check", "decide a map class or verify identities")
    sp.add_argument("--ring", dest="rings", action="append")
    sp.add_argument("--xi", type=Path, required=True)
    sp.add_argument("--tau", type=Path)
    sp.add_argument("--class", dest="cls", required=True, choices=list(CHECKS))

    sp = add("decompose", "certify the decomposition of a generalized Jordan derivation")
    sp.add_argument("--ring", dest="rings", action="append")
    sp.add_argument("--xi", type=Path, required=True)
    sp.add_argument("--tau", type=Path, required=True)

    for name, help in (("verify-theorem", "solve and certify the generalized Jordan derivation space"),
                       ("torsion-search", "dimension comparison in characteristic 2")):
        sp = add(name, help, poset=False)
        group = sp.add_mutually_exclusive_group()
        group.add_argument("--poset", type=Path)
        group.add_argument("--all-posets-up-to", "--max-size", dest="max_poset_size", type=int)
        sp.add_argument("--ring", dest="rings", action="append")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        sp.add_argument("--summary", action="store_true", help="human readable lines on stderr")
    return parser


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(subcommand=ns.subcommand)
    for key in ("poset", "xi", "tau", "cls", "out", "dump", "seed", "samples", "max_poset_size", "summary"):
        if hasattr(ns, key):
            setattr(cfg, key, getattr(ns, key))
    if getattr(ns, "rings", None):
        cfg.rings = ns.rings
    elif cfg.subcommand == "torsion-search":
        cfg.rings = ["Z/2"]
    return cfg


def run(cfg: RunConfig) -> int:
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except InputError as exc:
        print(f"incalg: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"incalg: invariant violation: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

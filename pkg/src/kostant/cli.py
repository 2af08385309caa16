"""Command-line interface: ``kostant decide | search-negative | orbit``.

Rationals are written ``p/q`` or as integers, weights as comma-separated
coordinates in basis order (``e`` coordinates before ``d`` coordinates).
Algebra specs::

    sl2             gl(2), the rank-one case
    a:m1+m2+...     gl(m1) + gl(m2) + ...
    gl:m            gl(m)
    gl:m,n          the superalgebra gl(m|n) (also glsuper:m,n)
    sp:n, csp:n     sp(2n), and C + sp(2n) with a central e coordinate
    osp2:n          osp(2|2n)
    pe:n            pe(n)

``--zeta`` takes ``zero``, ``nonsingular`` or 1-based simple root indices.
``--pairings`` gives <lam + rho, alpha^vee> per simple root (type A blocks
only); the coordinates of lam + rho in each block are then fixed to sum to 0.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .rootdata import (
    AlgebraSpec,
    CharacterSupport,
    DimensionMismatch,
    Weight,
    build_root_datum,
    sub,
)
from .search import (
    NegativityWitness,
    NotAntidominantError,
    SingularCharacterError,
    find_negativity_witness,
    paper_family_lambda,
)
from .verdict import CITATIONS, ModuleKind, ProblemRef, Status, Verdict, decide
from .weyl import (
    EnumerationBoundExceeded,
    OrbitResult,
    WeylElement,
    antidominant_representative,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RATIONAL = 3
EXIT_DIMENSION = 4
EXIT_SPEC = 5
EXIT_BOUND = 6
EXIT_SINGULAR = 7
EXIT_NOT_ANTIDOMINANT = 8
EXIT_INPUT = 9

SCHEMA_FILE = "report.schema.json"


class InputError(Exception):
    exit_code = EXIT_INPUT


class MalformedRational(InputError):
    exit_code = EXIT_RATIONAL


class UnknownSpec(InputError):
    exit_code = EXIT_SPEC


class WeightDimensionError(InputError):
    exit_code = EXIT_DIMENSION


# --- parsing ----------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, slash, den = text.partition("/")
    try:
        if slash:
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise MalformedRational(f"malformed rational {text!r} (expected p/q or an integer)") from None
    return value


def parse_rationals(text: str) -> List[Fraction]:
    if not text.strip():
        return []
    return [parse_rational(part) for part in text.split(",")]


def _sizes(text: str, sep: str, spec: str) -> List[int]:
    try:
        sizes = [int(p) for p in text.split(sep)]
    except ValueError:
        raise UnknownSpec(f"unknown spec {spec!r}: sizes must be integers") from None
    if any(s < 1 for s in sizes):
        raise UnknownSpec(f"unknown spec {spec!r}: sizes must be positive")
    return sizes


def parse_spec(text: str, super_flag: bool = False) -> AlgebraSpec:
    text = text.strip().lower()
    if text == "sl2":
        spec = AlgebraSpec.type_a(2)
    else:
        head, colon, rest = text.partition(":")
        if not colon or not rest:
            raise UnknownSpec(f"unknown spec {text!r}")
        if head == "a":
            spec = AlgebraSpec.type_a(*_sizes(rest, "+", text))
        elif head in ("gl", "glsuper"):
            sizes = _sizes(rest, ",", text)
            if len(sizes) == 2:
                spec = AlgebraSpec.gl(*sizes)
            elif len(sizes) == 1 and head == "gl" and not super_flag:
                spec = AlgebraSpec.type_a(sizes[0])
            else:
                raise UnknownSpec(f"unknown spec {text!r}: gl(m|n) needs two sizes")
        elif head in ("sp", "csp"):
            (n,) = _one(rest, text)
            spec = AlgebraSpec.type_c(n, central=head == "csp")
        elif head == "osp2":
            (n,) = _one(rest, text)
            spec = AlgebraSpec.osp2(n)
        elif head == "pe":
            (n,) = _one(rest, text)
            spec = AlgebraSpec.pe(n)
        else:
            raise UnknownSpec(f"unknown spec {text!r}")
    if super_flag and not spec.is_super:
        raise UnknownSpec(f"--super given but {text!r} is not a superalgebra spec")
    return spec


def _one(rest: str, text: str) -> List[int]:
    sizes = _sizes(rest, ",", text)
    if len(sizes) != 1:
        raise UnknownSpec(f"unknown spec {text!r}: expected a single size")
    return sizes


def parse_zeta(text: str, rank: int) -> CharacterSupport:
    text = text.strip().lower()
    if text in ("zero", "0", "none", ""):
        return CharacterSupport.zero(rank)
    if text in ("nonsingular", "full", "all"):
        return CharacterSupport.nonsingular(rank)
    try:
        indices = [int(p) - 1 for p in text.split(",")]
    except ValueError:
        raise InputError(f"bad --zeta {text!r}: use zero, nonsingular or 1-based indices") from None
    try:
        return CharacterSupport(indices, rank)
    except ValueError as exc:
        raise InputError(f"bad --zeta {text!r}: {exc}") from None


def lambda_from_pairings(spec: AlgebraSpec, pairings: Sequence[Fraction]) -> Weight:
    """Weight whose ``lam + rho`` has the given simple coroot pairings.

    Within each type A block, ``lam + rho`` is chosen with coordinate sum 0.
    """
    blocks = spec.type_a_blocks()
    if blocks is None:
        raise InputError(f"--pairings is only supported for type A blocks, not {spec}")
    d = build_root_datum(spec)
    if len(pairings) != d.rank:
        raise WeightDimensionError(f"{spec} has {d.rank} simple roots, got {len(pairings)} pairings")
    shifted = [Fraction(0)] * spec.dim
    it = iter(pairings)
    for block in blocks:
        idx = list(block)
        partial = [Fraction(0)]
        for _ in idx[1:]:
            partial.append(partial[-1] - next(it))
        first = -sum(partial, Fraction(0)) / len(idx)
        for k, p in zip(idx, partial):
            shifted[k] = first + p
    return sub(tuple(shifted), d.rho_even)


# --- reports ----------------------------------------------------------------

def _q(mu: Optional[Sequence[Fraction]]):
    return None if mu is None else [str(x) for x in mu]


def _unq(values) -> Optional[Weight]:
    return None if values is None else tuple(Fraction(v) for v in values)


def _element_to_dict(w: WeylElement) -> Dict:
    return {"permutation": [j + 1 for j in w.perm], "signs": list(w.signs),
            "one_line": w.one_line()}


def _element_from_dict(data: Dict) -> WeylElement:
    return WeylElement(tuple(j - 1 for j in data["permutation"]), tuple(data["signs"]))


def _support_list(zeta: CharacterSupport) -> List[int]:
    return [i + 1 for i in zeta.sorted()]


def _target_to_dict(ref: ProblemRef) -> Dict:
    return {"module_kind": ref.module_kind.value, "over": ref.over.label(),
            "lambda": _q(ref.lam), "zeta_support": _support_list(ref.zeta)}


def _target_from_dict(data: Dict) -> ProblemRef:
    over = parse_spec(data["over"])
    rank = build_root_datum(over).rank
    return ProblemRef(ModuleKind(data["module_kind"]), over, _unq(data["lambda"]),
                      CharacterSupport([i - 1 for i in data["zeta_support"]], rank))


@dataclass
class Report:
    command: str
    spec: AlgebraSpec
    lambda_input: Dict
    lam: Weight
    zeta: CharacterSupport
    module_kind: Optional[str] = None
    canonical_lambda: Optional[Weight] = None
    verdict: Optional[Verdict] = None
    witness: Optional[NegativityWitness] = None
    orbit: Optional[OrbitResult] = None
    citations: List[str] = field(default_factory=list)
    message: str = ""

    def to_dict(self) -> Dict:
        out = {
            "command": self.command,
            "spec": self.spec.label(),
            "module_kind": self.module_kind,
            "lambda_input": self.lambda_input,
            "lambda": _q(self.lam),
            "zeta_support": _support_list(self.zeta),
            "canonical_lambda": _q(self.canonical_lambda),
            "verdict": None,
            "witness": None,
            "orbit": None,
            "citations": list(self.citations),
            "message": self.message,
        }
        if self.verdict is not None:
            v = self.verdict
            out["verdict"] = {
                "status": v.status.value,
                "citation": v.citation,
                "notes": v.notes,
                "target": None if v.target is None else _target_to_dict(v.target),
            }
        if self.witness is not None:
            out["witness"] = dict(_element_to_dict(self.witness.w), mu=_q(self.witness.mu))
        if self.orbit is not None:
            out["orbit"] = {"representative": _q(self.orbit.representative),
                            "witness": _element_to_dict(self.orbit.witness),
                            "orbit_size": self.orbit.orbit_size}
        return out

    @classmethod
    def from_dict(cls, data: Dict) -> "Report":
        spec = parse_spec(data["spec"])
        rank = build_root_datum(spec).rank
        verdict = witness = orbit = None
        if data.get("witness") is not None:
            w = data["witness"]
            witness = NegativityWitness(_element_from_dict(w), _unq(w["mu"]), True, True)
        if data.get("verdict") is not None:
            v = data["verdict"]
            target = None if v["target"] is None else _target_from_dict(v["target"])
            verdict = Verdict(Status(v["status"]), v["citation"], v["notes"], target,
                              witness if v["status"] == Status.NEGATIVE.value else None)
        if data.get("orbit") is not None:
            o = data["orbit"]
            orbit = OrbitResult(_unq(o["representative"]), _element_from_dict(o["witness"]),
                                o["orbit_size"])
        return cls(
            command=data["command"],
            spec=spec,
            lambda_input=data["lambda_input"],
            lam=_unq(data["lambda"]),
            zeta=CharacterSupport([i - 1 for i in data["zeta_support"]], rank),
            module_kind=data["module_kind"],
            canonical_lambda=_unq(data["canonical_lambda"]),
            verdict=verdict,
            witness=witness,
            orbit=orbit,
            citations=list(data["citations"]),
            message=data.get("message", ""),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"{self.command}  spec={self.spec.label()}"
                 + (f"  module={self.module_kind}" if self.module_kind else ""),
                 f"  lambda           = {_fmt(self.lam)}",
                 f"  zeta support     = {_support_list(self.zeta) or 'zero'}"]
        if self.canonical_lambda is not None:
            lines.append(f"  canonical lambda = {_fmt(self.canonical_lambda)}")
        if self.orbit is not None:
            lines += [f"  representative   = {_fmt(self.orbit.representative)}",
                      f"  witness          = {self.orbit.witness.one_line()} "
                      f"cycles {self.orbit.witness.cycles()}",
                      f"  orbit size       = {self.orbit.orbit_size}"]
        if self.verdict is not None:
            v = self.verdict
            lines.append(f"  verdict          = {v.status.value}")
            if v.target is not None:
                lines.append(f"  reduces to       = {v.target.module_kind.value} over "
                             f"{v.target.over.label()} at {_fmt(v.target.lam)}, "
                             f"zeta {_support_list(v.target.zeta) or 'zero'}")
            if v.notes:
                lines.append(f"  notes            = {v.notes}")
        if self.witness is not None:
            lines += [f"  witness w        = {self.witness.w.one_line()} "
                      f"cycles {self.witness.w.cycles()}",
                      f"  mu = w.lam - lam = {_fmt(self.witness.mu)}"]
        if self.message:
            lines.append(f"  {self.message}")
        for key in self.citations:
            lines.append(f"  [{key}] {CITATIONS.get(key, '')}")
        return "\n".join(lines)


def _fmt(mu: Weight) -> str:
    return "(" + ", ".join(str(x) for x in mu) + ")"


# --- commands ---------------------------------------------------------------

@dataclass
class Query:
    spec: AlgebraSpec
    lambda_form: str
    lambda_values: List[Fraction]
    zeta: CharacterSupport
    module_kind: Optional[str] = None

    def lam(self) -> Weight:
        if self.lambda_form == "pairings":
            return lambda_from_pairings(self.spec, self.lambda_values)
        if self.lambda_form == "paper_family":
            return paper_family_lambda(int(self.lambda_values[0]))
        if len(self.lambda_values) != self.spec.dim:
            raise WeightDimensionError(f"{self.spec} weights have {self.spec.dim} coordinates, "
                                       f"got {len(self.lambda_values)}")
        return tuple(self.lambda_values)

    def echo(self) -> Dict:
        return {"form": self.lambda_form, "values": [str(x) for x in self.lambda_values]}


_KIND_BY_FLAG = {
    "standard": ModuleKind.STANDARD_WHITTAKER,
    "simple": ModuleKind.SIMPLE_WHITTAKER,
    "verma": ModuleKind.VERMA,
}


def cmd_decide(query: Query) -> Report:
    lam = query.lam()
    kind = _KIND_BY_FLAG[query.module_kind]
    zeta = query.zeta
    if kind == ModuleKind.VERMA and not zeta.is_zero:
        raise InputError("--verma requires --zeta zero")
    canonical, verdict = decide(query.spec, kind, lam, zeta)
    return Report(
        command="decide",
        spec=query.spec,
        lambda_input=query.echo(),
        lam=lam,
        zeta=zeta,
        module_kind=query.module_kind,
        canonical_lambda=canonical,
        verdict=verdict,
        witness=verdict.witness,
        citations=[verdict.citation] if verdict.citation else [],
    )


def cmd_search_negative(query: Query) -> Report:
    lam = query.lam()
    d = build_root_datum(query.spec)
    witness = find_negativity_witness(d, lam, query.zeta)
    return Report(
        command="search-negative",
        spec=query.spec,
        lambda_input=query.echo(),
        lam=lam,
        zeta=query.zeta,
        canonical_lambda=lam,
        witness=witness,
        citations=["finite-dimensional-translation-witness"] if witness else [],
        message="witness found" if witness else "no witness found (this does not imply positivity)",
    )


def cmd_orbit(query: Query) -> Report:
    lam = query.lam()
    d = build_root_datum(query.spec)
    result = antidominant_representative(d, lam, query.zeta)
    return Report(
        command="orbit",
        spec=query.spec,
        lambda_input=query.echo(),
        lam=lam,
        zeta=query.zeta,
        canonical_lambda=result.representative,
        orbit=result,
    )


_COMMANDS = {"decide": cmd_decide, "search-negative": cmd_search_negative, "orbit": cmd_orbit}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kostant",
        description="Cited Kostant-problem verdicts, negativity witnesses and dot-orbits "
                    "over exact weights.",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--input", metavar="FILE",
                        help="batch mode: one command line per row, one JSON object per output line")
    sub_parsers = parser.add_subparsers(dest="command")

    def common(p, default_zeta):
        p.add_argument("--spec", required=True, help="algebra, e.g. sl2, a:2+1, gl:2,1, sp:2, osp2:1, pe:3")
        p.add_argument("--super", action="store_true", help="insist that --spec is a superalgebra")
        p.add_argument("--zeta", default=default_zeta,
                       help=f"zero | nonsingular | 1-based indices (default {default_zeta})")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def weights(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--coords", help="comma-separated coordinates of lambda (p/q or integers)")
        g.add_argument("--pairings", help="<lambda + rho, alpha^vee> for each simple root")
        return g

    p = sub_parsers.add_parser("decide", help="decide Kostant's problem")
    common(p, "zero")
    weights(p)
    kind = p.add_mutually_exclusive_group(required=True)
    for flag in _KIND_BY_FLAG:
        kind.add_argument(f"--{flag}", dest="module_kind", action="store_const", const=flag)

    p = sub_parsers.add_parser("search-negative", help="search W for a translation witness")
    common(p, "nonsingular")
    g = weights(p)
    g.add_argument("--paper-family", type=int, metavar="N",
                   help="use the gl(N) weight with lambda + rho = sum (k-1)/N e_k")

    p = sub_parsers.add_parser("orbit", help="canonical W_zeta-anti-dominant representative")
    common(p, "nonsingular")
    weights(p)
    return parser


_VALUE_FLAGS = ("--coords", "--pairings", "--zeta")


def _glue_values(argv: Sequence[str]) -> List[str]:
    # "--coords -1,0" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _query_from_args(args) -> Query:
    spec = parse_spec(args.spec, args.super)
    rank = build_root_datum(spec).rank
    zeta = parse_zeta(args.zeta, rank)
    if getattr(args, "paper_family", None) is not None:
        n = args.paper_family
        if n < 2:
            raise InputError("--paper-family needs N >= 2")
        if spec != AlgebraSpec.type_a(n):
            raise WeightDimensionError(f"--paper-family {n} lives in gl({n}), not {spec}")
        return Query(spec, "paper_family", [Fraction(n)], zeta, None)
    if args.pairings is not None:
        return Query(spec, "pairings", parse_rationals(args.pairings), zeta,
                     getattr(args, "module_kind", None))
    return Query(spec, "coords", parse_rationals(args.coords), zeta,
                 getattr(args, "module_kind", None))


def run(args) -> Report:
    query = _query_from_args(args)
    return _COMMANDS[args.command](query)


def _error_code(exc: BaseException) -> int:
    if isinstance(exc, InputError):
        return exc.exit_code
    if isinstance(exc, EnumerationBoundExceeded):
        return EXIT_BOUND
    if isinstance(exc, SingularCharacterError):
        return EXIT_SINGULAR
    if isinstance(exc, NotAntidominantError):
        return EXIT_NOT_ANTIDOMINANT
    if isinstance(exc, DimensionMismatch):
        return EXIT_DIMENSION
    return EXIT_INPUT


_HANDLED = (InputError, EnumerationBoundExceeded, SingularCharacterError, NotAntidominantError,
            DimensionMismatch, ValueError)


def _run_batch(parser: argparse.ArgumentParser, path: str, out) -> int:
    worst = EXIT_OK
    with open(path) as fh:
        rows = [line.strip() for line in fh]
    for lineno, row in enumerate(rows, 1):
        if not row or row.startswith("#"):
            continue
        try:
            args = parser.parse_args(_glue_values(shlex.split(row)))
            if args.command is None:
                raise InputError("missing command")
            text = run(args).to_json()
        except SystemExit as exc:
            text = json.dumps({"error": f"usage error in {row!r}", "exit_code": EXIT_USAGE,
                               "line": lineno})
            worst = worst or (exc.code or EXIT_USAGE)
        except _HANDLED as exc:
            code = _error_code(exc)
            text = json.dumps({"error": str(exc), "exit_code": code, "line": lineno})
            worst = worst or code
        out.write(text + "\n")
    return worst


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_glue_values(argv))
    if args.input:
        if args.command is not None:
            parser.error("--input runs its own command lines; do not combine it with a command")
        return _run_batch(parser, args.input, sys.stdout)
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE
    try:
        report = run(args)
    except _HANDLED as exc:
        code = _error_code(exc)
        if args.json:
            print(json.dumps({"error": str(exc), "exit_code": code}))
        else:
            print(f"kostant: error: {exc}", file=sys.stderr)
        return code
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line interface.

Every subcommand reads graphs from files (``-`` for standard input),
writes its result to ``--output`` or standard output, and returns an exit
status:

    0  success
    1  a certificate or protocol check failed
    2  usage or input error (a JSON object describing it goes to stderr)
    3  a result was not proved optimal and ``--require-optimal`` was given
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd

from . import __version__
from .base import Limits
from .digraph import (
    TRANSFORMS,
    Digraph,
    closure_gadget,
    closure_graph,
    dumps_graph,
    is_acyclic,
    is_closure_realizable,
    read_graph,
    transform,
)
from .exact import (
    PARAMETERS,
    a5c_square_cover,
    certificate_from_dict,
    certificate_to_dict,
    chromatic_number,
    compute_all_params,
    verify_certificate,
)
from .extremal import antichain_cover, bollobas_cover_bounds, is_antichain
from .families import FAMILY_TAGS, generate_family
from .fractional import fractional_chromatic, fractional_dichromatic
from .products import PRODUCT_OPS, and_power, header_path, power, power_header, read_power_header
from .protocol import (
    VARIANTS,
    ChannelModel,
    confirm_protocol_check,
    decode_protocol_check,
    message_length_table,
    simulate_transcripts,
)
from .rates import DEFAULT_TMAX, compound_report, dilworth_bounds, scan_tournaments
from .utils.decorators import command_handler
from .utils.logger import RunLog, configure_logging
from .utils.utilities import create_run_folder, dump_json, format_float, format_rational

# Setup module logger
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_NOT_OPTIMAL = 3

OUTPUT_FORMATS = ("json", "csv", "text")


@dataclass
class RunConfig:
    """One parsed invocation.

    Attributes:
        command (str): Subcommand name.
        options (dict): Subcommand options (inputs, t, families, ...).
        budget (float): Seconds per solver call, or None for the default.
        fmt (str): Output format; None lets each command pick (text for graphs, JSON otherwise).
        output (str): Output path; None writes to standard output.
        seed (int): Seed for sampled output.
        limits (Limits): Size caps in force.
        require_optimal (bool): Exit with status 3 on bracketed results.
        run_dir (str): Parent folder of a ``runN`` folder holding outputs and the ledger.
        argv (list): The raw arguments, for the ledger header.
    """

    command: str
    options: Dict[str, object] = field(default_factory=dict)
    budget: Optional[float] = None
    fmt: Optional[str] = None
    output: Optional[str] = None
    seed: int = 0
    limits: Limits = field(default_factory=Limits.from_env)
    require_optimal: bool = False
    run_dir: Optional[str] = None
    argv: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.fmt is not None and self.fmt not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format '{self.fmt}', expected one of {', '.join(OUTPUT_FORMATS)}")
        if self.budget is not None and self.budget <= 0:
            raise ValueError(f"Budget must be positive, got {self.budget}")


class _Emitter:
    """Writes command results and records them in the run ledger."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.ledger: Optional[RunLog] = None
        self.folder: Optional[str] = None
        if config.run_dir:
            self.folder = create_run_folder(config.run_dir)
            self.ledger = RunLog(self.folder, command=" ".join(["pydilworth", *config.argv]))

    def path(self, name: str) -> str:
        if self.folder and not os.path.isabs(name):
            return os.path.join(self.folder, name)
        return name

    def write(self, text: str, name: Optional[str] = None) -> Optional[str]:
        """Write ``text`` to the resolved path ``name``, else to ``--output`` or standard output."""
        target = name
        if target is None:
            if self.config.output is None or self.config.output == "-":
                sys.stdout.write(text)
                return None
            target = self.path(self.config.output)
        with open(target, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote {target}")
        if self.ledger is not None:
            self.ledger.record_artifact(target)
        return target


def _render(config: RunConfig, payload: Dict[str, object], table: Optional[pd.DataFrame] = None,
            text: Optional[Callable[[], str]] = None) -> str:
    if config.fmt in (None, "json"):
        return dump_json(payload)
    if config.fmt == "csv":
        if table is None:
            raise ValueError(f"CSV output is not available for '{config.command}'")
        return table.to_csv(index=False)
    if text is not None:
        return text()
    if table is not None:
        return table.to_string(index=False) + "\n"
    return "\n".join(f"{key}: {value}" for key, value in sorted(payload.items())) + "\n"


def _graph(config: RunConfig, key: str = "graph") -> Digraph:
    return read_graph(str(config.options.get(key) or "-"))


def _graph_text(config: RunConfig, G: Digraph) -> str:
    return dumps_graph(G, "json" if config.fmt == "json" else "text")


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------


def cmd_gen(config: RunConfig, out: _Emitter) -> int:
    if config.options.get("square_cover"):
        square = and_power(generate_family("A5c"), 2, config.limits)
        cert = a5c_square_cover()
        payload = certificate_to_dict(square, cert, cert.k, optimal=False)
        out.write(dump_json(payload))
        return EXIT_OK
    tag = config.options.get("family")
    if not tag:
        raise ValueError(f"gen needs a family, one of {', '.join(FAMILY_TAGS)}")
    params = [int(p) for p in config.options.get("params") or []]
    out.write(_graph_text(config, generate_family(str(tag), *params)))
    return EXIT_OK


def cmd_info(config: RunConfig, out: _Emitter) -> int:
    G = _graph(config)
    payload = {
        "n": G.n,
        "edges": G.edge_count,
        "graph_hash": G.graph_hash,
        "max_out_degree": G.max_out_degree,
        "max_in_degree": G.max_in_degree,
        "symmetric": G.is_symmetric,
        "acyclic": is_acyclic(G),
    }
    out.write(_render(config, payload))
    return EXIT_OK


def cmd_transform(config: RunConfig, out: _Emitter) -> int:
    G = transform(_graph(config), str(config.options["kind"]))
    out.write(_graph_text(config, G))
    return EXIT_OK


def cmd_power(config: RunConfig, out: _Emitter) -> int:
    G = _graph(config)
    t = int(config.options["t"])
    op = str(config.options["op"])
    P = power(G, t, op, config.limits)
    target = out.write(_graph_text(config, P))
    if target is not None:
        header = power_header(G.n, t, op)
        sidecar = header_path(target)
        out.write(json.dumps(header, sort_keys=True) + "\n", sidecar)
    return EXIT_OK


def cmd_params(config: RunConfig, out: _Emitter) -> int:
    G = _graph(config)
    names = None if config.options.get("all") else config.options.get("param")
    results = compute_all_params(G, names, config.budget, config.limits)
    cert_dir = config.options.get("cert_dir")
    for name, result in results.items():
        logger.info(f"{name}={result.value} ({result.status}) in {result.elapsed:.3f}s")
        check = verify_certificate(G, result.certificate)
        if not check.ok:
            logger.error(f"{name}: certificate failed verification: {check.violation}")
            return EXIT_VERIFICATION_FAILED
        if cert_dir:
            path = out.path(os.path.join(str(cert_dir), f"{name}.json"))
            os.makedirs(os.path.dirname(path), exist_ok=True)
            out.write(dump_json(certificate_to_dict(G, result.certificate, result.value, result.optimal)), path)
    payload = {"graph_hash": G.graph_hash, "params": {name: r.to_dict() for name, r in results.items()}}
    table = pd.DataFrame([{"param": name, **r.to_dict()} for name, r in results.items()])

    def text() -> str:
        lines = []
        for name, r in results.items():
            shown = str(r.value) if r.optimal else f"{r.value} (bracket [{r.lower}, {r.upper}])"
            lines.append(f"{name}={shown}")
        return "\n".join(lines) + "\n"

    out.write(_render(config, payload, table, text))
    if config.require_optimal and not all(r.optimal for r in results.values()):
        return EXIT_NOT_OPTIMAL
    return EXIT_OK


def cmd_frac(config: RunConfig, out: _Emitter) -> int:
    G = _graph(config)
    kind = str(config.options["kind"])
    solution = fractional_dichromatic(G, config.limits) if kind == "dichromatic" else \
        fractional_chromatic(G, config.limits)
    payload = {"graph_hash": G.graph_hash, "kind": kind, **solution.to_dict()}
    out.write(_render(config, payload, text=lambda: f"{kind}_f={format_rational(solution.value)} "
                                                   f"(log2 {format_float(solution.log2_value)})\n"))
    return EXIT_OK


def cmd_rate_bounds(config: RunConfig, out: _Emitter) -> int:
    G = _graph(config)
    report = dilworth_bounds(G, int(config.options["tmax"]), config.budget, config.limits)

    def text() -> str:
        lines = [f"rate kind: {report.rate_kind}"]
        for entry in report.lower + report.upper:
            lines.append(f"{entry.side:5} {format_rational(entry.base)}^(1/{entry.root}) "
                         f"log2={format_float(entry.log2)} [{entry.provenance}]")
        if report.pinned is not None:
            lines.append(f"pinned: log2={format_float(report.pinned.log2)}")
        lines.append(report.per_t.to_string(index=False))
        return "\n".join(lines) + "\n"

    out.write(_render(config, report.to_dict(), report.per_t, text))
    statuses = list(report.per_t["chi_status"]) + list(report.per_t["chidir_status"])
    if config.require_optimal and "bracket" in statuses:
        return EXIT_NOT_OPTIMAL
    return EXIT_OK


def cmd_verify_cover(config: RunConfig, out: _Emitter) -> int:
    graph_path = str(config.options["graph"])
    G = read_graph(graph_path)
    header = read_power_header(graph_path) if graph_path != "-" else None
    with open(str(config.options["certificate"]), encoding="utf-8") as f:
        payload = json.load(f)
    expected = payload.get("graph_hash") if isinstance(payload, dict) else None
    if expected and expected != G.graph_hash:
        raise ValueError(f"Certificate graph_hash {expected[:12]}... does not match the graph ({G.graph_hash[:12]}...)")
    cert = certificate_from_dict(payload, header)
    check = verify_certificate(G, cert)
    result = {"ok": check.ok, "violation": list(check.violation) if check.violation else None}
    out.write(_render(config, result))
    if not check.ok:
        logger.error(f"Certificate failed verification: {check.violation}")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_closure(config: RunConfig, out: _Emitter) -> int:
    out.write(_graph_text(config, closure_graph(_graph(config))))
    return EXIT_OK


def cmd_gadget(config: RunConfig, out: _Emitter) -> int:
    out.write(_graph_text(config, closure_gadget(_graph(config))))
    return EXIT_OK


def cmd_realizable(config: RunConfig, out: _Emitter) -> int:
    answer = is_closure_realizable(_graph(config), config.limits)
    out.write(_render(config, answer.to_dict()))
    return EXIT_OK


def cmd_compound(config: RunConfig, out: _Emitter) -> int:
    family = [read_graph(str(path)) for path in config.options["graphs"]]
    table = compound_report(family, int(config.options["tmax"]), config.budget, config.limits)
    out.write(_render(config, {"rows": table.to_dict(orient="records")}, table))
    if config.require_optimal and (table["chi_union_status"] != "optimal").any():
        return EXIT_NOT_OPTIMAL
    return EXIT_OK


def cmd_simulate(config: RunConfig, out: _Emitter) -> int:
    G = _graph(config)
    variant = str(config.options["variant"])
    t = int(config.options["t"])
    ch = ChannelModel(G)
    if config.options.get("lengths"):
        table = message_length_table(ch, t, variant, config.budget, config.limits)
        out.write(_render(config, {"rows": table.to_dict(orient="records")}, table))
        return EXIT_OK

    base = G if variant == "confirm" else closure_graph(G)
    result = chromatic_number(and_power(base, t, config.limits), config.budget, config.limits)
    coloring = result.certificate
    if config.options.get("seed") is not None:
        transcripts = simulate_transcripts(ch, t, coloring, int(config.options["count"]), config.seed, variant)
        out.write("".join(json.dumps(tr.to_dict(), sort_keys=True) + "\n" for tr in transcripts))
        return EXIT_OK
    check_fn = confirm_protocol_check if variant == "confirm" else decode_protocol_check
    check = check_fn(ch, t, coloring, limits=config.limits)
    payload = {"variant": variant, "t": t, "colors": coloring.k, **check.to_dict()}
    out.write(_render(config, payload))
    return EXIT_OK if check.passed else EXIT_VERIFICATION_FAILED


def cmd_extremal(config: RunConfig, out: _Emitter) -> int:
    t = int(config.options["t"])
    if config.options["kind"] == "antichains":
        levels = antichain_cover(t)
        if not all(is_antichain(level) for level in levels):
            return EXIT_VERIFICATION_FAILED
        payload = {"t": t, "count": len(levels), "antichains": [[sorted(s) for s in level] for level in levels]}
        table = pd.DataFrame([{"level": k, "size": len(level)} for k, level in enumerate(levels)])
        out.write(_render(config, payload, table))
        return EXIT_OK
    bounds = bollobas_cover_bounds(t, config.budget, config.limits)
    out.write(_render(config, bounds.to_dict()))
    if config.require_optimal and bounds.exact is not None and not bounds.exact_optimal:
        return EXIT_NOT_OPTIMAL
    return EXIT_OK


def cmd_scan_tournaments(config: RunConfig, out: _Emitter) -> int:
    table = scan_tournaments(int(config.options["n"]), config.budget, config.limits)
    out.write(_render(config, {"rows": table.to_dict(orient="records")}, table))
    return EXIT_OK


# Mapping of subcommand names to handlers
_commands: Dict[str, Callable[[RunConfig, _Emitter], int]] = {
    "gen": cmd_gen,
    "info": cmd_info,
    "transform": cmd_transform,
    "power": cmd_power,
    "params": cmd_params,
    "frac": cmd_frac,
    "rate-bounds": cmd_rate_bounds,
    "verify-cover": cmd_verify_cover,
    "closure": cmd_closure,
    "gadget": cmd_gadget,
    "realizable": cmd_realizable,
    "compound": cmd_compound,
    "simulate": cmd_simulate,
    "extremal": cmd_extremal,
    "scan-tournaments": cmd_scan_tournaments,
}


@command_handler(logger, log_success=True)
def run(config: RunConfig) -> int:
    """Execute one parsed invocation and return its exit status."""
    handler = _commands.get(config.command)
    if handler is None:
        raise ValueError(f"Unknown command '{config.command}'")
    out = _Emitter(config)
    status = handler(config, out)
    if out.ledger is not None:
        out.ledger.note(f"exit status {status}")
        out.ledger.separator()
    return status


# ----------------------------------------------------------------------
# Argument parsing
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="Output file (default: standard output)")
    common.add_argument("-f", "--format", dest="fmt", choices=OUTPUT_FORMATS,
                        help="Output format (default: text for graphs, json otherwise)")
    common.add_argument("--budget", type=float, help="Seconds per solver call (default: $PYDILWORTH_BUDGET or 60)")
    common.add_argument("--limits", default="", help="Cap overrides, e.g. max_vertices=4096,max_sets=100000")
    common.add_argument("--require-optimal", action="store_true", help="Exit with status 3 on bracketed results")
    common.add_argument("--run-dir", help="Write outputs and a run ledger into a new runN folder here")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging (-v info, -vv debug)")
    common.add_argument("--log-file", help="Also write logs to this file")

    parser = argparse.ArgumentParser(prog="pydilworth", description="Zero-error digraph parameters and Dilworth rates")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="Generate a named digraph family")
    p.add_argument("family", nargs="?", help=f"One of {', '.join(FAMILY_TAGS)}")
    p.add_argument("params", nargs="*", help="Integer family parameters")
    p.add_argument("--square-cover", action="store_true", help="Emit the six-class acyclic cover of the square of A5c")

    p = sub.add_parser("info", parents=[common], help="Basic graph statistics")
    p.add_argument("graph", nargs="?", default="-")

    p = sub.add_parser("transform", parents=[common], help="Complement, reverse or symmetrize")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--kind", choices=TRANSFORMS, required=True)

    p = sub.add_parser("power", parents=[common], help="AND or OR power (writes a sidecar header)")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--op", choices=PRODUCT_OPS, default="and")

    p = sub.add_parser("params", parents=[common],
                       help="Exact parameters with certificates (JSON by default, -f text for name=value lines)")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--all", action="store_true", help="Compute every parameter")
    p.add_argument("--param", action="append", choices=list(PARAMETERS), help="Parameter to compute (repeatable)")
    p.add_argument("--cert-dir", help="Write one certificate JSON per parameter into this folder")

    p = sub.add_parser("frac", parents=[common], help="Fractional (di)chromatic number")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--kind", choices=("dichromatic", "chromatic"), default="dichromatic")

    p = sub.add_parser("rate-bounds", parents=[common], help="Dilworth rate bound report")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--tmax", type=int, default=DEFAULT_TMAX)

    p = sub.add_parser("verify-cover", parents=[common], help="Verify a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")

    for name, text in (("closure", "Closure graph of a channel digraph"),
                       ("gadget", "Digraph whose closure contains a symmetric graph"),
                       ("realizable", "Is a symmetric graph the closure of some digraph?")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("graph", nargs="?", default="-")

    p = sub.add_parser("compound", parents=[common], help="Compound family report")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--tmax", type=int, default=DEFAULT_TMAX)

    p = sub.add_parser("simulate", parents=[common], help="Check or simulate a protocol")
    p.add_argument("--graph", default="-")
    p.add_argument("--variant", choices=VARIANTS, default="confirm")
    p.add_argument("-t", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="Exhaustive adversarial check (default)")
    mode.add_argument("--seed", type=int, help="Emit seeded transcripts as JSON lines")
    mode.add_argument("--lengths", action="store_true", help="Message-length table for t = 1..T")
    p.add_argument("--count", type=int, default=10, help="Number of seeded transcripts")

    p = sub.add_parser("extremal", parents=[common], help="Antichain and cross-intersecting covers")
    p.add_argument("kind", choices=("antichains", "bollobas"))
    p.add_argument("-t", type=int, required=True)

    p = sub.add_parser("scan-tournaments", parents=[common], help="Bounds over all small tournaments")
    p.add_argument("-n", type=int, required=True)
    return parser


_GLOBAL_KEYS = ("output", "fmt", "budget", "limits", "require_optimal", "run_dir", "verbose", "log_file", "command")


def config_from_args(args: argparse.Namespace, argv: Sequence[str] = ()) -> RunConfig:
    """Turn parsed arguments into a ``RunConfig``; ``--limits`` is applied to the environment defaults."""
    options = {key: value for key, value in vars(args).items() if key not in _GLOBAL_KEYS}
    return RunConfig(
        command=args.command,
        options=options,
        budget=args.budget,
        fmt=args.fmt,
        output=args.output,
        seed=args.seed if getattr(args, "seed", None) is not None else 0,
        limits=Limits.from_env().with_overrides(args.limits),
        require_optimal=args.require_optimal,
        run_dir=args.run_dir,
        argv=list(argv),
    )


@command_handler(logger, suppress_traceback=True)
def _configure(args: argparse.Namespace, argv: Sequence[str]) -> RunConfig:
    return config_from_args(args, argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point."""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.log_file)
    config = _configure(args, argv)
    if isinstance(config, int):
        return config
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

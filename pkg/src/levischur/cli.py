"""
Command-line front end.

Subcommands:

  verify     run the full verification suite for one shape
  dims       print per-layer orbit counts and algebra dimensions
  orbits     dump the orbit representatives per layer
  relations  run only the defining-relation suite (plus the boundary
             observations, which are reported and never gated)
  report     verify plus dims plus relations in one JSON document

Exit codes: 0 all gated checks pass, 1 a gated check failed, 2 invalid
configuration, 3 size cap exceeded.  JSON goes to stdout with sorted
keys; wall-clock measurements live under a "timing" key so reports can
be compared byte for byte after dropping it.  Runs over a prime field
are labelled informative; the rationals are authoritative.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import combinatorics as comb
from . import enhanced_core as enh
from . import hecke
from .combinatorics import Shape
from .duality import run_duality
from .linalg import DEFAULT_SIZE_CAP, QQ, SizeCapExceeded, parse_field

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_CONFIG = 2
EXIT_SIZE_CAP = 3


@dataclass(frozen=True)
class RunConfig:
    m: int
    n: int
    r: int
    vparity: str = "both"          # even | odd | both
    field: str = "q"               # q | p:<odd prime>
    command: str = "verify"
    output: str = "text"           # text | json
    size_cap: int = DEFAULT_SIZE_CAP

    def shapes(self) -> list[Shape]:
        field = parse_field(self.field)
        parities = {"even": (0,), "odd": (1,), "both": (0, 1)}[self.vparity]
        return [
            Shape(self.m, self.n, self.r, vp, field) for vp in parities
        ]

    def validate(self) -> None:
        if self.m < 1 or self.n < 0 or self.r < 1:
            raise ValueError("need m >= 1, n >= 0, r >= 1")
        if self.vparity not in ("even", "odd", "both"):
            raise ValueError(f"bad vparity {self.vparity!r}")
        parse_field(self.field)
        if self.size_cap < 1:
            raise ValueError("size cap must be positive")


def _check(name: str, vparity: int, passed: bool, gated: bool, **details):
    entry = {
        "name": name,
        "vparity": vparity,
        "passed": bool(passed),
        "gated": bool(gated),
    }
    if details:
        entry["details"] = details
    return entry


def _relation_checks(shape: Shape) -> list[dict]:
    checks = []
    failures = []
    count = 0
    for inst in hecke.relation_instances(shape):
        count += 1
        if not hecke.check_relation(inst, shape):
            failures.append(inst.rel)
    checks.append(
        _check(
            "relations", shape.vparity, not failures, True,
            instances=count, failed=sorted(set(failures)),
        )
    )
    boundary = hecke.boundary_observations(shape)
    checks.append(
        _check(
            "boundary_swap_layer_commutation", shape.vparity,
            True, False,
            observed=[
                {"i": i, "sigma": list(sigma), "commutes": ok}
                for i, sigma, ok in boundary
            ],
        )
    )
    return checks


def _commutation_check(shape: Shape) -> dict:
    gens = [hecke.xi_gen(g, shape) for g in hecke.hecke_generators(shape)]
    basis = enh.levi_basis(shape)
    bad = 0
    for b in basis:
        mat = enh.rho_levi(b, shape)
        for g in gens:
            if not mat.commutes_with(g):
                bad += 1
    return _check(
        "commutation", shape.vparity, bad == 0, True,
        pairs=len(basis) * len(gens), failed=bad,
    )


def _duality_checks(shape: Shape, size_cap: int) -> tuple[list[dict], dict]:
    rep = run_duality(shape, size_cap)
    checks = [
        _check(
            "first_duality", shape.vparity,
            rep.first_isomorphism_holds, True,
            dim_levi=rep.dim_levi, dim_commutant_D=rep.dim_commutant_D,
        ),
        _check(
            "second_duality_containment", shape.vparity,
            rep.second_containment_holds, True,
        ),
        _check(
            "second_duality", shape.vparity,
            rep.second_isomorphism_holds, rep.r_le_mplusn,
            dim_D=rep.dim_D, dim_commutant_levi=rep.dim_commutant_levi,
            observed_only=not rep.r_le_mplusn,
        ),
        _check(
            "faithfulness_rank", shape.vparity,
            rep.levi_rank_matches_basis, True,
            dim_levi=rep.dim_levi,
        ),
        _check(
            "faithful_layer_action", shape.vparity,
            all(rep.faithful_layers), True,
            layers=list(rep.faithful_layers),
        ),
        _check(
            "layer_decomposition", shape.vparity,
            all(rep.per_layer_endo_equal) and rep.layer_sum_matches, True,
            per_layer=list(rep.per_layer_endo_equal),
            sum_matches=rep.layer_sum_matches,
        ),
    ]
    dims = {
        "ambient": rep.dim_ambient,
        "levi": rep.dim_levi,
        "d_algebra": rep.dim_D,
        "per_layer_orbits": list(rep.per_layer_orbits),
        "per_layer_endos": list(rep.per_layer_endo_dims),
    }
    return checks, dims


def _cross_parity_check(cfg: RunConfig) -> dict:
    """The two Levi representations are conjugate by a diagonal sign
    matrix (the swap generators are genuinely different operators across
    parities, so no global conjugation exists; see enhanced_core)."""
    field = parse_field(cfg.field)
    sh0 = Shape(cfg.m, cfg.n, cfg.r, 0, field)
    sh1 = Shape(cfg.m, cfg.n, cfg.r, 1, field)
    flip = enh.parity_flip_conjugator(sh0)
    ok = True
    for b0, b1 in zip(enh.levi_basis(sh0), enh.levi_basis(sh1)):
        m0 = enh.rho_levi(b0, sh0)
        m1 = enh.rho_levi(b1, sh1)
        if (flip @ m0 @ flip).entries != m1.entries:
            ok = False
            break
    return _check("cross_parity_conjugation", -1, ok, True)


def _base_report(cfg: RunConfig) -> dict:
    return {
        "shape": {"m": cfg.m, "n": cfg.n, "r": cfg.r},
        "field": cfg.field,
        "field_authoritative": cfg.field == "q",
        "vparity": cfg.vparity,
    }


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    t0 = time.perf_counter()
    report = _base_report(cfg)
    checks: list[dict] = []
    dims: dict = {}
    for shape in cfg.shapes():
        checks.extend(_relation_checks(shape))
        checks.append(_commutation_check(shape))
        dchecks, dims = _duality_checks(shape, cfg.size_cap)
        checks.extend(dchecks)
    if cfg.vparity == "both":
        checks.append(_cross_parity_check(cfg))
    report["dims"] = dims
    report["checks"] = checks
    report["pass"] = all(c["passed"] for c in checks if c["gated"])
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return report, EXIT_OK if report["pass"] else EXIT_CHECK_FAILED


def cmd_dims(cfg: RunConfig) -> tuple[dict, int]:
    t0 = time.perf_counter()
    report = _base_report(cfg)
    shape = cfg.shapes()[0]
    per_layer = {
        str(l): len(comb.orbit_reps(shape, l))
        for l in range(1, shape.r + 1)
    }
    report["dims"] = {
        "ambient": shape.dim_enhanced,
        "per_layer_orbits": per_layer,
        "levi": enh.levi_dimension(shape),
        "d_algebra": hecke.d_algebra(shape, cfg.size_cap).dimension,
    }
    report["checks"] = []
    report["pass"] = True
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return report, EXIT_OK


def cmd_orbits(cfg: RunConfig) -> tuple[dict, int]:
    report = _base_report(cfg)
    shape = cfg.shapes()[0]
    layers = {}
    for l in range(shape.r + 1):
        layers[str(l)] = [
            {"row": list(row), "col": list(col)}
            for row, col in comb.orbit_reps(shape, l)
        ]
    report["orbits"] = layers
    report["checks"] = []
    report["pass"] = True
    report["timing"] = {"seconds": 0.0}
    return report, EXIT_OK


def cmd_relations(cfg: RunConfig) -> tuple[dict, int]:
    t0 = time.perf_counter()
    report = _base_report(cfg)
    checks: list[dict] = []
    for shape in cfg.shapes():
        checks.extend(_relation_checks(shape))
    report["checks"] = checks
    report["pass"] = all(c["passed"] for c in checks if c["gated"])
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return report, EXIT_OK if report["pass"] else EXIT_CHECK_FAILED


def cmd_report(cfg: RunConfig) -> tuple[dict, int]:
    report, status = cmd_verify(cfg)
    shape = cfg.shapes()[0]
    report["dims"]["per_layer_orbits_by_layer"] = {
        str(l): len(comb.orbit_reps(shape, l))
        for l in range(shape.r + 1)
    }
    return report, status


_COMMANDS = {
    "verify": cmd_verify,
    "dims": cmd_dims,
    "orbits": cmd_orbits,
    "relations": cmd_relations,
    "report": cmd_report,
}


def _emit_text(report: dict, out) -> None:
    shape = report["shape"]
    print(
        f"shape ({shape['m']}|{shape['n']},{shape['r']}) "
        f"field={report['field']} vparity={report['vparity']}",
        file=out,
    )
    if "dims" in report and report["dims"]:
        for key in sorted(report["dims"]):
            print(f"  dim {key} = {report['dims'][key]}", file=out)
    if "orbits" in report:
        for l in sorted(report["orbits"], key=int):
            reps = report["orbits"][l]
            print(f"  layer {l}: {len(reps)} representatives", file=out)
            for rep in reps:
                print(f"    {tuple(rep['row'])} | {tuple(rep['col'])}",
                      file=out)
    for c in report.get("checks", []):
        status = "PASS" if c["passed"] else "FAIL"
        gate = "" if c["gated"] else " (observed, not gated)"
        vp = "" if c["vparity"] < 0 else f" [vparity {c['vparity']}]"
        print(f"  {status} {c['name']}{vp}{gate}", file=out)
    print(f"overall: {'PASS' if report['pass'] else 'FAIL'}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levischur",
        description=(
            "Exact verification of the double centralizer on the "
            "enhanced tensor superspace."
        ),
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--m", type=int, required=True,
                        help="number of even basis vectors (>= 1)")
    parser.add_argument("--n", type=int, required=True,
                        help="number of odd basis vectors (>= 0)")
    parser.add_argument("--r", type=int, required=True,
                        help="tensor degree (>= 1)")
    parser.add_argument("--vparity", choices=("even", "odd", "both"),
                        default="both")
    parser.add_argument("--field", default="q",
                        help="q for rationals, p:<odd prime> for a prime field")
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP,
                        help="largest allowed ambient dimension")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        m=args.m, n=args.n, r=args.r,
        vparity=args.vparity, field=args.field,
        command=args.command, output=args.output,
        size_cap=args.size_cap,
    )
    try:
        cfg.validate()
        Shape(cfg.m, cfg.n, cfg.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    if cfg.command != "orbits" and (cfg.m + cfg.n + 1) ** cfg.r > cfg.size_cap:
        print(
            f"error: ambient dimension {(cfg.m + cfg.n + 1) ** cfg.r} "
            f"exceeds size cap {cfg.size_cap}",
            file=sys.stderr,
        )
        return EXIT_SIZE_CAP
    try:
        report, status = _COMMANDS[cfg.command](cfg)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    if cfg.output == "json":
        json.dump(report, sys.stdout, sort_keys=True, indent=2)
        print()
    else:
        _emit_text(report, sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())

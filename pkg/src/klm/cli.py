"""Command-line surface: compute, verify, certify.

Subcommands wrap the library modules; results render as canonical text or
as JSON with big integers serialized as decimal strings.  Every run is
recorded in an append-only JSON-lines cache keyed by a content hash of the
command; re-running an identical command replays the stored payload byte
for byte.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import hooklen, klcoeff, oracle, seqfactor, zcoeff
from .certificate import Certificate, Stopwatch
from .klcoeff import kl_poly, max_index
from .polyring import Poly, render, render_in_d
from .realroot import (all_zeros_real_negative, hurwitz_positivity_symbolic,
                       n_sequence_test)
from .seqfactor import SeqSpec, gy_poly, qr_poly, seq_value
from .zcoeff import z_from_kl

ENGINE_VERSION = "klm-0.1.0"
DEFAULT_CACHE = ".klm-cache.jsonl"

COMPUTE_KINDS = ("kl", "z", "char", "G", "Y", "Q", "R")
VERIFY_SUITES = ("formulas", "z-formulas", "hooks", "oracle", "identities",
                 "narayana", "reform")
CERTIFY_TARGETS = ("kl-roots", "z-roots", "dseq-f", "dseq-b",
                   "hurwitz-G", "hurwitz-Y")


class UsageError(Exception):
    pass


# -- JSON rendering --------------------------------------------------------------


def _coeff_str(c) -> str:
    if isinstance(c, Poly):
        return render_in_d(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_payload(kind: str, m: int, d: int | None, p: Poly) -> dict:
    return {"kind": kind, "m": m, "d": d, "coeffs": [_coeff_str(c) for c in p.coeffs]}


def parse_poly_payload(payload: dict) -> Poly:
    """Round-trip parser for numeric polynomial payloads."""
    return Poly(tuple(Fraction(c) for c in payload["coeffs"]))


def _emit_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- cache -----------------------------------------------------------------------


def cache_path(args) -> Path:
    if args.cache:
        return Path(args.cache)
    return Path(os.environ.get("KLM_CACHE", DEFAULT_CACHE))


def run_key(command: str, params: dict) -> str:
    blob = _emit_json({"engine": ENGINE_VERSION, "command": command, "params": params})
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_lookup(path: Path, key: str) -> dict | None:
    if not path.exists():
        return None
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if rec.get("key") == key:
                return rec
    return None


def cache_append(path: Path, record: dict) -> None:
    with path.open("a") as fh:
        fh.write(_emit_json(record) + "\n")


def cached_run(args, command: str, params: dict, produce) -> tuple[str, int]:
    """Replay a cached payload or produce, print, and record a fresh one.

    produce() returns (payload_text, exit_code).
    """
    path = cache_path(args)
    key = run_key(command, params)
    hit = cache_lookup(path, key)
    if hit is not None:
        sys.stdout.write(hit["payload"])
        return hit["payload"], int(hit["exit"])
    start = time.monotonic()
    payload, code = produce()
    sys.stdout.write(payload)
    cache_append(path, {
        "key": key, "command": command, "params": params, "payload": payload,
        "exit": code, "millis": int((time.monotonic() - start) * 1000),
        "jobs": getattr(args, "jobs", 1)})
    return payload, code


# -- parallel grid driver ----------------------------------------------------------


def _map_cells(worker, cells: list, jobs: int) -> list:
    """Deterministic map over grid cells, optionally across processes."""
    if jobs <= 1 or len(cells) < 2:
        return [worker(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(cells) // (jobs * 4))
        return list(pool.map(worker, cells, chunksize=chunk))


def _cell_formulas(cell):
    return klcoeff.compare_routes_at(*cell)


def _cell_z(cell):
    return zcoeff.compare_routes_at(*cell)


def _cell_hook(cell):
    return hooklen.check_hook_cell(*cell)


def _cell_kl_root(cell):
    m, d = cell
    return all_zeros_real_negative(kl_poly(m, d), f"kl-roots m={m} d={d}").to_json()


def _cell_z_root(cell):
    m, d = cell
    return all_zeros_real_negative(z_from_kl(m, d), f"z-roots m={m} d={d}").to_json()


def _cell_dseq(cell):
    family, m, d = cell
    spec = SeqSpec(family, m)
    gamma = [seq_value(spec, d, i) for i in range(d + 1)]
    return n_sequence_test(gamma, d, f"dseq-{family} m={m} d={d}").to_json()


def _cell_hurwitz(cell):
    family, m = cell
    return hurwitz_positivity_symbolic(family, m).to_json()


# -- compute ---------------------------------------------------------------------


def compute_poly(kind: str, m: int, d: int | None, route: str,
                 symbolic_d: bool) -> tuple[Poly, int | None]:
    if kind in ("kl", "z", "char", "Q", "R") and d is None:
        raise UsageError(f"compute {kind} requires --d")
    if kind in ("G", "Y") and d is None and not symbolic_d:
        raise UsageError(f"compute {kind} requires --d or --symbolic-d")
    if kind == "kl":
        return kl_poly(m, d, route), d
    if kind == "z":
        return z_from_kl(m, d), d
    if kind == "char":
        return oracle.char_poly(oracle.RankedLattice(m, d)), d
    if kind in ("G", "Y"):
        spec = SeqSpec("f" if kind == "G" else "b", m)
        return gy_poly(spec, None if symbolic_d else d), None if symbolic_d else d
    spec = SeqSpec("f" if kind == "Q" else "b", m)
    return qr_poly(spec, d), d


def cmd_compute(args) -> int:
    params = {"kind": args.kind, "m": args.m, "d": args.d, "route": args.route,
              "symbolic_d": args.symbolic_d, "json": args.json}

    def produce():
        p, d = compute_poly(args.kind, args.m, args.d, args.route, args.symbolic_d)
        if args.json:
            return _emit_json(poly_payload(args.kind, args.m, d, p)) + "\n", 0
        return render(p) + "\n", 0

    return cached_run(args, "compute", params, produce)[1]


# -- verify ----------------------------------------------------------------------


def _grid_certificate(subject: str, cells: list, worker, jobs: int) -> Certificate:
    watch = Stopwatch()
    failures = _map_cells(worker, cells, jobs)
    for cell, failure in zip(cells, failures):
        if failure is not None:
            return watch.done(subject, "identity", failure)
    return watch.done(subject, "identity", None, {"checked": len(cells)})


def run_verify(suite: str, m_max: int, d_max: int, jobs: int) -> list[Certificate]:
    if suite == "formulas":
        cells = [(m, d, i) for m in range(1, m_max + 1)
                 for d in range(1, d_max + 1) for i in range(max_index(d) + 1)]
        return [_grid_certificate(f"four-route-agreement m<={m_max} d<={d_max}",
                                  cells, _cell_formulas, jobs)]
    if suite == "z-formulas":
        cells = [(m, d) for m in range(1, m_max + 1) for d in range(1, d_max + 1)]
        return [_grid_certificate(f"z-three-route-agreement m<={m_max} d<={d_max}",
                                  cells, _cell_z, jobs)]
    if suite == "hooks":
        cells = [(m, d, i, h) for m in range(1, m_max + 1)
                 for d in range(1, d_max + 1)
                 for i in range(1, (d - 1) // 2 + 1)
                 for h in range(1, min(m, d - 2 * i) + 1)]
        return [_grid_certificate(f"hook-factorizations m<={m_max} d<={d_max}",
                                  cells, _cell_hook, jobs),
                hooklen.verify_equivariant_sum(m_max, d_max)]
    if suite == "oracle":
        return [oracle.verify_oracle_agreement(m_max + d_max),
                oracle.restriction_contraction_audit(min(10, m_max + d_max))]
    if suite == "identities":
        return [klcoeff.verify_proof_identities(m_max, d_max),
                verify_diagonal_identities(m_max, d_max)]
    if suite == "narayana":
        return [zcoeff.narayana_check(d_max)]
    if suite == "reform":
        return [seqfactor.kl_reformulation_check(m_max, d_max)]
    raise UsageError(f"unknown verify suite {suite!r}")


def verify_diagonal_identities(m_max: int, d_max: int) -> Certificate:
    """f_m(d,d) = binom(m+d-1, m-1) and G_{m,d}(1) equals the same value."""
    from .arith import binomial
    watch = Stopwatch()
    subject = f"diagonal-identities m<={m_max} d<={d_max}"
    for m in range(1, m_max + 1):
        spec = SeqSpec("f", m)
        for d in range(1, d_max + 1):
            want = binomial(m + d - 1, m - 1)
            got = seq_value(spec, d, d)
            at_one = gy_poly(spec, d).eval(Fraction(1))
            if got != want or at_one != want:
                return watch.done(subject, "identity", {
                    "m": m, "d": d, "f_diagonal": str(got),
                    "G_at_1": str(at_one), "binomial": want})
    return watch.done(subject, "identity", None, {"m_max": m_max, "d_max": d_max})


def _format_certs(certs: list[Certificate], as_json: bool) -> tuple[str, int]:
    lines = []
    code = 0
    for c in certs:
        if as_json:
            lines.append(_emit_json(c.to_json()))
        else:
            lines.append(f"{c.subject}: {c.verdict}"
                         + (f" witness={_emit_json(c.witness)}" if not c.passed else ""))
        if not c.passed:
            code = 1
    return "\n".join(lines) + "\n", code


def write_routes_csv(path: str, suite: str, m_max: int, d_max: int) -> None:
    """Regression CSV: one row per (m,d,i) with a column per formula route."""
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        if suite == "formulas":
            out.writerow(["m", "d", "i", "recursive", "hook", "alternating", "positive"])
            for m in range(1, m_max + 1):
                for d in range(1, d_max + 1):
                    for i in range(max_index(d) + 1):
                        hook = str(klcoeff.c_hook_form(m, d, i)) if i >= 1 else ""
                        out.writerow([m, d, i, klcoeff.c_recursive(m, d, i), hook,
                                      str(klcoeff.c_alternating(m, d, i)),
                                      str(klcoeff.c_positive(m, d, i))])
        else:
            out.writerow(["m", "d", "i", "from_kl", "alternating", "positive"])
            for m in range(1, m_max + 1):
                for d in range(1, d_max + 1):
                    z = z_from_kl(m, d)
                    for i in range(d + 1):
                        alt = "1" if i == d else str(zcoeff.z_alternating(m, d, i))
                        out.writerow([m, d, i, str(z.coeff(i)), alt,
                                      str(zcoeff.z_positive(m, d, i))])


def cmd_verify(args) -> int:
    if args.csv and args.suite not in ("formulas", "z-formulas"):
        raise UsageError("--csv is supported for the formulas and z-formulas suites")
    params = {"suite": args.suite, "m_max": args.m_max, "d_max": args.d_max,
              "json": args.json}

    def produce():
        certs = run_verify(args.suite, args.m_max, args.d_max, args.jobs)
        return _format_certs(certs, args.json)

    payload, code = cached_run(args, "verify", params, produce)
    if args.csv:
        write_routes_csv(args.csv, args.suite, args.m_max, args.d_max)
    return code


# -- certify ---------------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """'2..6' -> [2,...,6]; '4' -> [4]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        out = list(range(int(lo), int(hi) + 1))
        if not out:
            raise UsageError(f"empty range {text!r}")
        return out
    return [int(text)]


def run_certify(target: str, ms: list[int], ds: list[int], jobs: int) -> list[dict]:
    if target == "kl-roots":
        return _map_cells(_cell_kl_root, [(m, d) for m in ms for d in ds], jobs)
    if target == "z-roots":
        return _map_cells(_cell_z_root, [(m, d) for m in ms for d in ds], jobs)
    if target in ("dseq-f", "dseq-b"):
        family = target[-1]
        return _map_cells(_cell_dseq, [(family, m, d) for m in ms for d in ds], jobs)
    if target in ("hurwitz-G", "hurwitz-Y"):
        family = target[-1]
        return _map_cells(_cell_hurwitz, [(family, m) for m in ms], jobs)
    raise UsageError(f"unknown certify target {target!r}")


def cmd_certify(args) -> int:
    ms = parse_range(args.m)
    ds = parse_range(args.d) if args.d else [1]
    params = {"target": args.target, "m": args.m, "d": args.d, "json": args.json}

    def produce():
        records = run_certify(args.target, ms, ds, args.jobs)
        lines = []
        code = 0
        for rec in records:
            if args.json:
                lines.append(_emit_json(rec))
            else:
                lines.append(f"{rec['subject']}: {rec['verdict']}")
            if rec["verdict"] != "pass":
                code = 1
        return "\n".join(lines) + "\n", code

    return cached_run(args, "certify", params, produce)[1]


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="klm",
                                  description="Kazhdan-Lusztig and Z-polynomials of "
                                              "uniform matroids, exactly")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON payloads")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--cache", default=None, help="run-record cache path "
                       "(default $KLM_CACHE or .klm-cache.jsonl)")

    pc = sub.add_parser("compute", help="compute one polynomial")
    pc.add_argument("kind", choices=COMPUTE_KINDS)
    pc.add_argument("--m", type=int, required=True)
    pc.add_argument("--d", type=int, default=None)
    pc.add_argument("--route", default="positive",
                    choices=("recursive", "hook", "alternating", "positive"))
    pc.add_argument("--symbolic-d", action="store_true", dest="symbolic_d",
                    help="leave d symbolic (kinds G and Y)")
    common(pc)
    pc.set_defaults(fn=cmd_compute)

    pv = sub.add_parser("verify", help="run a cross-check grid")
    pv.add_argument("suite", choices=VERIFY_SUITES)
    pv.add_argument("--m-max", type=int, default=4, dest="m_max")
    pv.add_argument("--d-max", type=int, default=10, dest="d_max")
    pv.add_argument("--csv", default=None, help="write per-route CSV rows here")
    common(pv)
    pv.set_defaults(fn=cmd_verify)

    pz = sub.add_parser("certify", help="emit certificates for a target family")
    pz.add_argument("target", choices=CERTIFY_TARGETS)
    pz.add_argument("--m", required=True, help="m or lo..hi")
    pz.add_argument("--d", default=None, help="d or lo..hi")
    common(pz)
    pz.set_defaults(fn=cmd_certify)
    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

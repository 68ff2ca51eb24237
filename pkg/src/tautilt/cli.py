"""Command-line driver.

Subcommands: ``catalog`` lists the built-in pairs, ``enumerate`` walks one
mutation quiver and exports it as JSON and DOT, ``verify`` runs the full
verification stack on a pair and writes a JSON report.

Exit codes: 0 success, 1 failed checks or exhausted budget, 2 unknown
pair or bad usage.  Splitting-field and root-field failures restart the
run over the extension field of the reported degree (at most two
restarts) and are recorded in the output under ``field_events``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from .field import Field
from .algebra import FieldNotSplitting, comp_dims
from .tilting import enumerate_hasse, g_vector, two_term_silting
from .grouprep import PermGroup, central_primitive_idempotents, group_handle
from .clifford import (FieldTooSmall, check_hypotheses, counting_check,
                       property_suite, verify_hasse_embedding, verify_squares)
from .catalog import CATALOG, build


def _threads() -> int:
    raw = os.environ.get("TAUTILT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, min(64, n))


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    return x


def _parse_block(tokens):
    """--block accepts "principal" or "index N" (also "index:N")."""
    if tokens is None:
        return None
    text = " ".join(tokens).replace(":", " ").strip()
    if text == "principal":
        return "principal"
    parts = text.split()
    if len(parts) == 2 and parts[0] == "index" and parts[1].isdigit():
        return int(parts[1])
    raise ValueError(f"bad block selector: {text!r}")


def _select_algebra(pair, entry, side: str, block):
    """The block algebra to enumerate, with a short tag for filenames."""
    if side == "sub":
        handle, default = pair.g_handle, pair.b
    else:
        handle, default = pair.gtilde_handle, pair.btilde
    if block is None:
        chosen = default
        if side == "sub":
            tag = "principal" if entry.block_index is None \
                else f"index{entry.block_index}"
        else:
            tag = "covering"
    elif block == "principal":
        from .grouprep import principal_block
        chosen = principal_block(handle)
        tag = "principal"
    else:
        chosen = central_primitive_idempotents(handle)[block]
        tag = f"index{block}"
    return chosen, tag


def hasse_payload(alg, hq) -> dict:
    """JSON form of a labeled quiver over one block algebra."""
    simples = alg.simples_pims()[0]
    vertices = []
    for i, v in enumerate(hq.vertices):
        vertices.append({
            "id": i,
            "g_vector": list(g_vector(two_term_silting(v))),
            "m_dims": sorted(m.n for m in v.m_parts),
            "p_dims": sorted(p.n for p in v.p_parts),
        })
    arrows = [{"from": a, "to": b,
               "label_dim_vector": list(comp_dims(lab.module))}
              for a, b, lab in hq.arrows]
    return {"algebra": {"dim": alg.dim, "simples": [s.n for s in simples]},
            "vertices": vertices, "arrows": arrows}


def load_hasse(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def hasse_dot(payload: dict, name: str) -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=TB;"]
    for v in payload["vertices"]:
        label = "g={} m={} p={}".format(
            tuple(v["g_vector"]), v["m_dims"], v["p_dims"])
        lines.append(f'  {v["id"]} [label="{label}"];')
    for a in payload["arrows"]:
        label = tuple(a["label_dim_vector"])
        lines.append(f'  {a["from"]} -> {a["to"]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _with_field_retry(entry, m0, runner):
    """Run, restarting over the reported extension degree on splitting
    failures; at most two restarts.  Returns (result_or_None, events, m)."""
    m = m0 if m0 is not None else entry.m
    events = []
    for _ in range(3):
        try:
            return runner(m), events, m
        except (FieldNotSplitting, FieldTooSmall) as exc:
            events.append({"event": type(exc).__name__,
                           "degree": int(exc.degree), "at_m": m})
            m = m * int(exc.degree)
    return None, events, m


def cmd_catalog(args) -> int:
    for e in CATALOG.values():
        exp = " ".join(f"{k}={v}" for k, v in sorted(e.expected.items()))
        print(f"{e.name:<12} p={e.p} m={e.m} {e.quotient_kind:<12} "
              f"block={'principal' if e.block_index is None else e.block_index} "
              f"{exp}")
    return 0


def cmd_enumerate(args) -> int:
    entry = CATALOG.get(args.pair)
    if entry is None:
        print(f"unknown pair {args.pair!r}; choose from: "
              f"{', '.join(CATALOG)}", file=sys.stderr)
        return 2
    try:
        block = _parse_block(args.block)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return 2

    def runner(m):
        pair = build(entry, m=m)
        alg, tag = _select_algebra(pair, entry, args.side, block)
        alg = alg.block_algebra
        hq = enumerate_hasse(alg, args.max_vertices)
        payload = hasse_payload(alg, hq)
        return alg, tag, hq, payload

    result, events, m = _with_field_retry(entry, args.field_degree, runner)
    for ev in events:
        print("field event: {event} degree {degree} at m={at_m}"
              .format(**ev))
    if result is None:
        print("field retries exhausted", file=sys.stderr)
        return 1
    alg, tag, hq, payload = result
    payload["field"] = {"p": entry.p, "m": m}
    payload["complete"] = hq.complete
    if events:
        payload["field_events"] = events
    os.makedirs(args.out, exist_ok=True)
    base = os.path.join(args.out, f"{entry.name}.{args.side}.{tag}")
    with open(base + ".hasse.json", "w", encoding="utf-8") as fh:
        json.dump(_jsonable(payload), fh, indent=1)
    with open(base + ".hasse.dot", "w", encoding="utf-8") as fh:
        fh.write(hasse_dot(payload, f"{entry.name}.{args.side}.{tag}"))
    print(f"{len(hq.vertices)} vertices, {len(hq.arrows)} arrows "
          f"(complete={hq.complete})")
    if not hq.complete:
        print("vertex budget exhausted", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    entry = CATALOG.get(args.pair)
    if entry is None:
        print(f"unknown pair {args.pair!r}; choose from: "
              f"{', '.join(CATALOG)}", file=sys.stderr)
        return 2
    threads = _threads()
    t0 = time.time()

    def runner(m):
        pair = build(entry, m=m)
        hb = pair.hasse_b(args.max_vertices)
        hbt = pair.hasse_btilde(args.max_vertices)
        rep = {
            "pair": entry.name,
            "quotient_kind": entry.quotient_kind,
            "counts": {"sub": len(hb.vertices), "super": len(hbt.vertices)},
            "complete": hb.complete and hbt.complete,
            "hypotheses": check_hypotheses(pair),
            "squares": verify_squares(pair, threads=threads),
            "counting": counting_check(pair),
            "properties": property_suite(pair, seed=args.seed),
        }
        if entry.quotient_kind == "p-group":
            rep["embedding"] = verify_hasse_embedding(pair)
        if entry.expected:
            rep["expected_counts"] = entry.expected
            rep["counts_match"] = all(
                rep["counts"][k] == v for k, v in entry.expected.items())
        return rep

    rep, events, m = _with_field_retry(entry, args.field_degree, runner)
    if rep is None:
        rep = {"pair": entry.name, "pass": False,
               "error": "field retries exhausted"}
    else:
        checks = {
            "hypotheses": rep["hypotheses"]["pass"],
            "squares": rep["squares"]["pass"],
            "counting": rep["counting"],
            "properties": rep["properties"]["pass"],
            "complete": rep["complete"],
        }
        if "embedding" in rep:
            checks["embedding"] = rep["embedding"]["pass"]
        if "counts_match" in rep:
            checks["counts_match"] = rep["counts_match"]
        rep["pass"] = all(checks.values())
        rep["failing"] = sorted(k for k, v in checks.items() if not v)
    rep["field"] = {"p": entry.p, "m": m}
    rep["field_events"] = events
    rep["elapsed_s"] = round(time.time() - t0, 2)
    rep["threads"] = threads
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, f"{entry.name}.report.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_jsonable(rep), fh, indent=1)
    for ev in events:
        print("field event: {event} degree {degree} at m={at_m}"
              .format(**ev))
    if rep.get("pass"):
        print(f"{entry.name}: all checks passed "
              f"({rep.get('counts', {})}, {rep['elapsed_s']}s)")
        return 0
    print(f"{entry.name}: FAILED {rep.get('failing', rep.get('error'))}",
          file=sys.stderr)
    return 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tautilt",
        description="Enumerate and verify support tau-tilting transport "
                    "for blocks of modular group algebras.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("catalog", help="list built-in pairs")

    def common(p):
        p.add_argument("--pair", required=True, help="catalog entry name")
        p.add_argument("--field-degree", type=int, default=None,
                       help="override the entry's field degree m")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-vertices", type=int, default=10000)
        p.add_argument("--out", default=".", help="output directory")

    pe = sub.add_parser("enumerate", help="walk one mutation quiver")
    common(pe)
    pe.add_argument("--side", choices=["sub", "super"], default="sub",
                    help="block of the subgroup or of the ambient group")
    pe.add_argument("--block", nargs="+", default=None,
                    help='"principal" or "index N"')

    pv = sub.add_parser("verify", help="run the verification stack")
    common(pv)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "catalog":
        return cmd_catalog(args)
    if args.command == "enumerate":
        return cmd_enumerate(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())

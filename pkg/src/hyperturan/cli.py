"""Command-line front end.

JSON goes to stdout (``.lhg`` text for ``construct`` without ``--output``);
a one-line JSON run manifest goes to stderr.  Exit codes::

    0  success / found / pass / optimal
    1  pattern not found
    2  certificate failed
    3  search budget exhausted
    64 usage error
    65 data or format error
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass, field

from . import bounds, core, designs, patterns, search

EXIT_OK, EXIT_NOT_FOUND, EXIT_CERT_FAIL, EXIT_TRUNCATED = 0, 1, 2, 3
EXIT_USAGE, EXIT_DATA = 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunManifest:
    command: str
    args: dict
    input_digest: dict = field(default_factory=dict)
    output: list = field(default_factory=list)
    status: str = "ok"


def _read_input(path: str, manifest: RunManifest) -> core.LinearHypergraph:
    with open(path, "rb") as fh:
        raw = fh.read()
    manifest.input_digest[path] = hashlib.sha256(raw).hexdigest()
    text = raw.decode("utf-8")
    if text.lstrip().startswith("{"):
        return core.from_json(text)
    return core.parse(text)


def _write_lhg(H: core.LinearHypergraph, dest: str | None, manifest: RunManifest, out) -> None:
    text = core.serialize(H)
    if dest:
        with open(dest, "w", newline="\n") as fh:
            fh.write(text)
        manifest.output.append(dest)
    else:
        out.write(text)


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperturan", description="Linear Turan numbers of small linear hypertrees.")
    p.add_argument("--format", choices=["json"], default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a Steiner system")
    c.add_argument("--method", choices=["sts", "ag", "pg"], required=True)
    c.add_argument("--param", type=int, required=True, help="n for sts, q for ag/pg")
    c.add_argument("--output")

    v = sub.add_parser("verify", help="validate a hypergraph file and report its structure")
    v.add_argument("--input", required=True)

    d = sub.add_parser("detect", help="look for a forbidden configuration")
    d.add_argument("--pattern", required=True, help="star:k | path:k | b4 | crown")
    d.add_argument("--input", required=True)

    b = sub.add_parser("bound", help="evaluate an upper bound")
    b.add_argument("--kind", required=True, help="star | b4 | crown4 | path | p2 | pair")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--k", type=int)

    w = sub.add_parser("construct-witness", help="lower-bound witness (disjoint Steiner systems)")
    w.add_argument("--kind", choices=["tree", "p4"], required=True)
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--r", type=int, required=True)
    w.add_argument("--k", type=int)
    w.add_argument("--output")

    cb = sub.add_parser("certify-b4", help="certify a B_4-extremal hypergraph")
    cb.add_argument("--input", required=True)

    s = sub.add_parser("search", help="exact linear Turan number by branch and bound")
    _search_args(s)
    s.add_argument("--forbid", nargs="*", default=[], help="p2 p3 p4 s:k b4 crown")

    pr = sub.add_parser("probe", help="check an instance against the P_4 ceiling (r+1)n/r")
    _search_args(pr)
    return p


def _search_args(s):
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--node-budget", type=int)
    s.add_argument("--time-budget", type=float)
    s.add_argument("--symmetry", choices=["on", "off"], default="on")
    s.add_argument("--workers", type=int)


def _config(a) -> search.SearchConfig:
    return search.SearchConfig(
        node_budget=a.node_budget,
        time_budget=a.time_budget,
        symmetry=a.symmetry == "on",
        workers=a.workers or search.default_workers(),
    )


def _dispatch(a, manifest: RunManifest, out) -> int:
    cmd = a.command
    if cmd == "construct":
        H = {"sts": designs.construct_sts, "ag": designs.construct_affine_plane,
             "pg": designs.construct_projective_plane}[a.method](a.param)
        _write_lhg(H, a.output, manifest, out)
        if a.output:
            _emit({"n": H.n, "r": H.r, "edges": H.m, "output": a.output}, out)
        return EXIT_OK
    if cmd == "verify":
        H = _read_input(a.input, manifest)
        prof = core.degree_profile(H)
        _emit({
            "valid": True, "n": H.n, "r": H.r, "edges": H.m,
            "min_degree": prof.min, "max_degree": prof.max,
            "components": core.components(H).count,
            "steiner": designs.verify_steiner(H),
        }, out)
        return EXIT_OK
    if cmd == "detect":
        H = _read_input(a.input, manifest)
        P = patterns.pattern_from_spec(a.pattern, H.r)
        emb = patterns.contains(H, P)
        _emit(emb.to_dict() if emb else None, out)
        return EXIT_OK if emb else EXIT_NOT_FOUND
    if cmd == "bound":
        _emit(bounds.upper_bound(a.kind, a.n, a.r, a.k).to_dict(), out)
        return EXIT_OK
    if cmd == "construct-witness":
        if a.kind == "tree":
            if a.k is None:
                raise UsageError("--k is required for --kind tree")
            rep = bounds.tree_lower_construction(a.n, a.r, a.k)
        else:
            rep = bounds.p4_lower_construction(a.n, a.r)
        if a.output and rep.witness is not None:
            _write_lhg(rep.witness, a.output, manifest, out)
        d = rep.to_dict()
        d.pop("witness", None)
        d["edges"] = rep.witness.m if rep.witness is not None else 0
        _emit(d, out)
        return EXIT_OK
    if cmd == "certify-b4":
        H = _read_input(a.input, manifest)
        cert = bounds.verify_b4_extremal(H)
        _emit(cert.to_dict(), out)
        return EXIT_OK if cert.passed else EXIT_CERT_FAIL
    if cmd == "search":
        pats = [patterns.pattern_from_spec(f, a.r) for f in a.forbid]
        res = search.exact_linear_turan(a.n, a.r, pats, _config(a))
        _emit(res.to_dict(), out)
        return EXIT_OK if res.optimal else EXIT_TRUNCATED
    if cmd == "probe":
        pr = search.conjecture_probe(a.n, a.r, _config(a))
        _emit(pr.to_dict(), out)
        if pr.status == "violation":
            return EXIT_CERT_FAIL
        return EXIT_OK if pr.result.optimal else EXIT_TRUNCATED
    raise UsageError(f"unknown command {cmd}")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    manifest = RunManifest(argv[0] if argv else "", {})
    try:
        a = build_parser().parse_args(argv)
        manifest.command = a.command
        manifest.args = {k: v for k, v in sorted(vars(a).items()) if k != "command"}
        code = _dispatch(a, manifest, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        code = EXIT_USAGE
    except (core.HypergraphError, OSError, UnicodeDecodeError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        code = EXIT_DATA
    manifest.status = {0: "ok", 1: "not_found", 2: "certificate_failed", 3: "budget_exhausted",
                       64: "usage_error", 65: "data_error"}[code]
    err.write(json.dumps({"manifest": asdict(manifest)}, sort_keys=True, default=str) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

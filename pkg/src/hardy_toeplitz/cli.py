"""Command-line experiment runner.

An experiment is a JSON document::

    {
      "name": "linear-uat",
      "statement": "...",             # what the run is about, copied into the report
      "n": 2, "D": 10,
      "symbols": {"g": {"terms": [[mu, nu, re, im], ...]}},
      "maps": {"phi": {"matrix": [[...], [...]]}},
      "vectors": {"x": {"monomials": [[alpha, value], ...]}},
      "operator": {"op": "compose", "args": ["phi"]},
      "mode": "uniform",
      "params": {"m_max": 6, "seed": 0},
      "expect": "converges-to-zero"
    }

Exit status: 0 when the verdict matches ``expect`` (or none is given), 1 on a
mismatch, 2 when the document is invalid or the requested number of
iterations exceeds the certified degree.
"""
from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .basis import enumerate_basis
from .diagnostics import (
    cesaro_probe,
    lower_bound_probe,
    linear_uat_classifier,
    sat_probe,
    uat_sequence,
    weak_probe,
)
from .exact import parse_number
from .experiments import (
    coisometry_check,
    fixed_point_check,
    frame_check,
    induction_check,
    oracle_check,
    random_symbol,
    random_unitary,
)
from .operators import (
    TrustExhausted,
    add,
    adjoint,
    coefficient_vector,
    composition_op,
    identity_op,
    kernel_vector,
    multiply,
    rank_one,
    scale,
    toeplitz_op,
    zero_op,
)
from .presets import PRESETS
from .symbols import PolySelfMap, SphereSymbol

__all__ = ["SpecError", "build_operator", "run_experiment", "main"]

MODES = ("uniform", "strong", "cesaro", "weak-proxy", "lower-bound", "classify-linear",
         "oracle-validate", "fixed-point", "induction-formula", "frame-invariance", "coisometry")


class SpecError(ValueError):
    """The experiment document is malformed."""


# -- parsing ----------------------------------------------------------------


def parse_scalar(obj):
    """Exact numbers as in :func:`parse_number`, plus ``{"exp_i_pi": q}`` for e^{i pi q} (float)."""
    if isinstance(obj, dict) and "exp_i_pi" in obj:
        q = parse_number(obj["exp_i_pi"])
        r = complex(parse_number(obj.get("modulus", 1))).real
        return complex(r * np.exp(1j * np.pi * complex(q).real))
    try:
        return parse_number(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"cannot parse number {obj!r}") from exc


def parse_symbol(obj, n: int) -> SphereSymbol:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise SpecError(f"a symbol needs a 'terms' list, got {obj!r}")
    coeffs = {}
    for term in obj["terms"]:
        if len(term) == 3:
            mu, nu, c = term
            c = parse_scalar(c)
        elif len(term) == 4:
            mu, nu, re, im = term
            c = parse_scalar({"re": re, "im": im})
        else:
            raise SpecError(f"bad symbol term {term!r}")
        key = (tuple(mu), tuple(nu))
        coeffs[key] = coeffs.get(key, 0) + c
    try:
        return SphereSymbol(obj.get("n", n), coeffs)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def parse_map(obj, n: int) -> PolySelfMap:
    try:
        if "matrix" in obj:
            A = [[parse_scalar(c) for c in row] for row in obj["matrix"]]
            b = [parse_scalar(c) for c in obj["offset"]] if "offset" in obj else None
            phi = PolySelfMap.affine(A, b)
        elif "components" in obj:
            comps = []
            for terms in obj["components"]:
                p = {}
                for term in terms:
                    alpha, c = term[0], (parse_scalar(term[1]) if len(term) == 2
                                         else parse_scalar({"re": term[1], "im": term[2]}))
                    p[tuple(alpha)] = p.get(tuple(alpha), 0) + c
                comps.append(p)
            phi = PolySelfMap(obj.get("n", n), comps)
        else:
            raise SpecError(f"a map needs 'matrix' or 'components', got {obj!r}")
    except (TypeError, ValueError, KeyError) as exc:
        raise SpecError(f"bad map {obj!r}: {exc}") from exc
    if phi.n != n:
        raise SpecError(f"map has dimension {phi.n}, experiment has {n}")
    return phi


def parse_vector(obj, basis):
    try:
        if "monomials" in obj:
            return coefficient_vector({tuple(a): parse_scalar(c) for a, c in obj["monomials"]}, basis)
        if "kernel" in obj:
            return kernel_vector([parse_scalar(c) for c in obj["kernel"]], basis)
    except (TypeError, ValueError) as exc:
        raise SpecError(f"bad vector {obj!r}: {exc}") from exc
    raise SpecError(f"a vector needs 'monomials' or 'kernel', got {obj!r}")


class _Context:
    def __init__(self, spec: dict):
        try:
            self.n = int(spec["n"])
            self.D = int(spec["D"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError("experiment needs integer 'n' and 'D'") from exc
        try:
            self.basis = enumerate_basis(self.n, self.D)
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        self.symbols = {k: parse_symbol(v, self.n) for k, v in spec.get("symbols", {}).items()}
        self.maps = {k: parse_map(v, self.n) for k, v in spec.get("maps", {}).items()}
        self.vectors = {k: parse_vector(v, self.basis) for k, v in spec.get("vectors", {}).items()}

    def symbol(self, ref) -> SphereSymbol:
        if isinstance(ref, str):
            if ref not in self.symbols:
                raise SpecError(f"undeclared symbol {ref!r}")
            return self.symbols[ref]
        return parse_symbol(ref, self.n)

    def map(self, ref) -> PolySelfMap:
        if isinstance(ref, str):
            if ref not in self.maps:
                raise SpecError(f"undeclared map {ref!r}")
            return self.maps[ref]
        return parse_map(ref, self.n)

    def vector(self, ref):
        if isinstance(ref, str):
            if ref not in self.vectors:
                raise SpecError(f"undeclared vector {ref!r}")
            return self.vectors[ref]
        return parse_vector(ref, self.basis)


def build_operator(node, ctx: _Context):
    """Evaluate a recipe tree of ``{"op": ..., "args": [...]}`` nodes."""
    if not isinstance(node, dict) or "op" not in node:
        raise SpecError(f"operator node must be an object with 'op', got {node!r}")
    op, args = node["op"], node.get("args", [])

    def arity(k):
        if len(args) != k:
            raise SpecError(f"{op!r} takes {k} argument(s), got {len(args)}")

    if op == "toeplitz":
        arity(1)
        return toeplitz_op(ctx.symbol(args[0]), ctx.basis)
    if op == "compose":
        arity(1)
        return composition_op(ctx.map(args[0]), ctx.basis)
    if op == "adjoint":
        arity(1)
        return adjoint(build_operator(args[0], ctx))
    if op == "product":
        if len(args) < 2:
            raise SpecError("'product' takes at least two arguments")
        out = build_operator(args[-1], ctx)
        for a in reversed(args[:-1]):
            out = multiply(build_operator(a, ctx), out)
        return out
    if op == "sum":
        if not args:
            raise SpecError("'sum' takes at least one argument")
        out = build_operator(args[0], ctx)
        for a in args[1:]:
            out = add(out, build_operator(a, ctx))
        return out
    if op == "scale":
        arity(2)
        return scale(parse_scalar(args[0]), build_operator(args[1], ctx))
    if op == "rank_one":
        arity(2)
        return rank_one(ctx.vector(args[0]), ctx.vector(args[1]), ctx.basis)
    if op == "identity":
        return identity_op(ctx.basis)
    if op == "zero":
        return zero_op(ctx.basis)
    raise SpecError(f"unknown operator {op!r}")


# -- running ----------------------------------------------------------------


def _series_csv(rows) -> str:
    lines = ["m,value,bound"]
    for m, v, b in rows:
        lines.append(f"{m},{v!r},{'' if b is None else repr(b)}")
    return "\n".join(lines) + "\n"


def _params(spec: dict) -> dict:
    p = dict(spec.get("params", {}))
    p.setdefault("seed", 0)
    return p


def _need_operator(spec, ctx):
    if "operator" not in spec:
        raise SpecError(f"mode {spec.get('mode')!r} needs an 'operator'")
    return build_operator(spec["operator"], ctx)


def _convergence(spec, ctx, p):
    A = _need_operator(spec, ctx)
    mode = spec["mode"]
    m_max = int(p.get("m_max", 4))
    if m_max > A.valid_degree:
        raise TrustExhausted(f"m_max = {m_max} exceeds the certified degree; "
                             f"max usable m is {max(A.valid_degree, 0)}")
    X = None
    if "vectors" in p:
        X = {name: ctx.vector(name) for name in p["vectors"]}
    if mode == "uniform":
        report = uat_sequence(A, m_max, sup_samples=int(p.get("N", 100_000)), seed=int(p["seed"]),
                              s_max=int(p.get("s_max", 12)))
    elif mode == "strong":
        report = sat_probe(A, X, m_max)
    elif mode == "cesaro":
        report = cesaro_probe(A, X, m_max)
    else:
        report = weak_probe(A, m_max)
    result = report.to_json()
    if p.get("also_adjoint"):
        extra = sat_probe(adjoint(A), X, m_max) if mode == "strong" else \
            cesaro_probe(adjoint(A), X, m_max) if mode == "cesaro" else uat_sequence(adjoint(A), m_max)
        result["adjoint"] = extra.to_json()
    csv = report.to_csv()
    return result, report.verdict, csv


def _lower_bound(spec, ctx, p):
    f = ctx.symbol(p["symbol"])
    phi = ctx.map(p["map"])
    zeta = [parse_scalar(c) for c in p["zeta"]]
    eta = [parse_scalar(c) for c in p["eta"]] if "eta" in p else None
    if eta is None:
        # with A* zeta = conj(lambda) zeta and |lambda| = 1, eta = lambda zeta gives <Az, eta> = <z, zeta>
        lam = parse_scalar(p["lambda"])
        eta = [lam * z for z in zeta]
    s_max = int(p.get("s_max", 12))
    try:
        q = lower_bound_probe(f, phi, zeta, eta, s_max)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    target = abs(f(np.array([complex(z) for z in zeta])))
    tol = float(p.get("tolerance", 0.1))
    nondecreasing = all(b >= a - 1e-14 for a, b in zip(q, q[1:]))
    ok = nondecreasing and q[-1] >= target - tol
    result = {"series": [[s, v] for s, v in enumerate(q, start=1)], "target": target,
              "tolerance": tol, "nondecreasing": nondecreasing,
              "verdict": "certified" if ok else "not-certified"}
    csv = _series_csv([(s, v, target) for s, v in enumerate(q, start=1)])
    return result, result["verdict"], csv


def _classify(spec, ctx, p):
    phi = ctx.map(p["map"])
    if not phi.is_linear():
        raise SpecError("classify-linear needs a linear map")
    try:
        verdict = linear_uat_classifier(phi.matrix())
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    result = verdict.to_json()
    return result, result["verdict"], _series_csv([(1, verdict.spectral_radius, None)])


def _passfail(result, rows=None):
    """Pass/fail checks; ``rows`` of (index, value, bound) become the CSV series."""
    csv = _series_csv(rows) if rows else None
    return result, "pass" if result["passed"] else "fail", csv


def run_spec(spec: dict, seed: int | None = None):
    """Run one experiment; returns (result dict, verdict string, csv text or None)."""
    if not isinstance(spec, dict):
        raise SpecError("experiment must be a JSON object")
    mode = spec.get("mode")
    if mode not in MODES:
        raise SpecError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    p = _params(spec)
    if seed is not None:
        p["seed"] = seed
    ctx = _Context(spec)
    rng = np.random.default_rng(int(p["seed"]))
    if mode in ("uniform", "strong", "cesaro", "weak-proxy"):
        return _convergence(spec, ctx, p)
    if mode == "lower-bound":
        return _lower_bound(spec, ctx, p)
    if mode == "classify-linear":
        return _classify(spec, ctx, p)
    if mode == "coisometry":
        return _passfail(coisometry_check(ctx.basis))
    if mode == "fixed-point":
        count = int(p.get("count", 1))
        degree = int(p.get("degree", 2))
        rows = [fixed_point_check(random_symbol(ctx.n, degree, rng), ctx.basis) for _ in range(count)]
        return _passfail({"passed": all(r["passed"] for r in rows), "rows": rows},
                         [(k, float(r["passed"]), None) for k, r in enumerate(rows, start=1)])
    if mode == "induction-formula":
        g = ctx.symbol(p["symbol"]) if "symbol" in p else random_symbol(ctx.n, 2, rng)
        res = induction_check(ctx.map(p["phi"]), ctx.map(p["eta"]), g, ctx.basis,
                              tuple(p.get("ms", (1, 2, 3))))
        res["symbol"] = g.to_json()
        return _passfail(res, [(r["m"], float(r["equal"]), None) for r in res["rows"]])
    if mode == "frame-invariance":
        A = _need_operator(spec, ctx)
        Us = [random_unitary(ctx.n, rng) for _ in range(int(p.get("count", 5)))]
        res = frame_check(A, Us, float(p.get("tolerance", 1e-10)))
        return _passfail(res, [(k, d, res["tol"]) for k, d in enumerate(res["max_diff"], start=1)])
    # oracle-validate
    res = oracle_check(ctx.n, int(p.get("max_degree", 3)), int(p.get("entries", 30)),
                       int(p.get("N", 1_000_000)), int(p["seed"]))
    rows = []
    for k, r in enumerate(res["rows"], start=1):
        exact = complex(*r["exact"]) if isinstance(r["exact"], list) else r["exact"]
        est = complex(*r["estimate"]) if isinstance(r["estimate"], list) else r["estimate"]
        rows.append((k, abs(est - exact), 4 * r["stderr"]))
    return _passfail(res, rows)


def run_experiment(spec: dict, out_dir: Path | None = None, *, seed: int | None = None,
                   timestamp: bool = True, fmt: str = "json") -> int:
    """Run an experiment, write report.json / series.csv and return the exit status."""
    try:
        result, verdict, csv = run_spec(spec, seed)
    except TrustExhausted as exc:
        print(f"error: trust exhausted: {exc}", file=sys.stderr)
        return 2
    except (SpecError, KeyError) as exc:
        print(f"error: invalid experiment: {exc}", file=sys.stderr)
        return 2
    expect = spec.get("expect")
    status = 0 if expect is None or expect == verdict else 1
    doc = {
        "name": spec.get("name", "experiment"),
        "statement": spec.get("statement", ""),
        "seed": seed if seed is not None else _params(spec)["seed"],
        "verdict": verdict,
        "expect": expect,
        "matches_expectation": status == 0,
        "spec": spec,
        "result": result,
    }
    if timestamp:
        doc["timestamp"] = datetime.now(timezone.utc).isoformat()
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        if fmt in ("json", "both"):
            (out_dir / "report.json").write_text(text)
        if fmt in ("csv", "both") and csv is not None:
            (out_dir / "series.csv").write_text(csv)
    else:
        if fmt in ("json", "both"):
            sys.stdout.write(text)
        if fmt in ("csv", "both") and csv is not None:
            sys.stdout.write(csv)
    line = f"{doc['name']}: verdict={verdict}"
    if expect is not None:
        line += f" expected={expect} -> {'ok' if status == 0 else 'MISMATCH'}"
    print(line, file=sys.stderr)
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hardy-toeplitz",
        description="Run asymptotic-Toeplitzness experiments on truncated Hardy spaces.")
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", type=Path, help="experiment JSON file")
    src.add_argument("--preset", choices=sorted(PRESETS), help="built-in experiment")
    src.add_argument("--list-presets", action="store_true", help="list presets and exit")
    ap.add_argument("--out", type=Path, help="output directory (default: print JSON to stdout)")
    ap.add_argument("--seed", type=int, help="override the experiment seed")
    ap.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")
    ap.add_argument("--format", choices=("json", "csv", "both"), default="both")
    ap.add_argument("--dump-spec", action="store_true", help="print the experiment JSON and exit")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.list_presets:
        for name in sorted(PRESETS):
            print(f"{name:20s} {PRESETS[name]['statement']}")
        return 0
    if args.preset:
        spec = PRESETS[args.preset]
    else:
        try:
            spec = json.loads(args.spec.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read {args.spec}: {exc}", file=sys.stderr)
            return 2
    if args.dump_spec:
        print(json.dumps(spec, sort_keys=True, indent=2))
        return 0
    return run_experiment(spec, args.out, seed=args.seed, timestamp=not args.no_timestamp,
                          fmt=args.format)


if __name__ == "__main__":
    sys.exit(main())

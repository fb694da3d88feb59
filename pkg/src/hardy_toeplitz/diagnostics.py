"""Convergence diagnostics for the iterates Phi^m(A).

Every norm here is taken on a finite certified block, so it is a lower
bound for the corresponding norm on H^2.  Decay verdicts are therefore
backed by an analytic upper bound whenever one is available.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from .basis import multi_indices_of_degree
from .exact import QQi
from .operators import (
    TruncatedOperator,
    TrustExhausted,
    _to_complex,
    add,
    apply,
    coefficient_vector,
    kernel_vector,
    scale,
)
from .phi import cesaro_means, phi_apply, phi_iterate
from .symbols import (
    PolySelfMap,
    SphereSymbol,
    pairing_symbol,
    poly_pow,
    sphere_integral,
    sup_norm_estimate,
)

__all__ = [
    "ConvergenceReport",
    "LinearUATVerdict",
    "block_norm",
    "uat_sequence",
    "sat_probe",
    "cesaro_probe",
    "extract_symbol",
    "lower_bound_probe",
    "linear_uat_classifier",
    "decide_verdict",
    "default_probes",
    "weak_probe",
]

ZERO_TOL = 1e-6
PERSIST_LEVEL = 0.5

VERDICTS = ("converges-to-toeplitz", "converges-to-zero", "non-convergent", "inconclusive")
MODES = ("uniform", "strong", "cesaro", "weak-proxy")


@dataclass
class ConvergenceReport:
    mode: str
    series: list
    verdict: str
    residual: float = 0.0
    analytic_bound: list | None = None
    asymptotic_symbol: SphereSymbol | None = None
    differences: list | None = None
    probes: dict | None = None
    certificate: dict | None = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if not self.series:
            raise ValueError("a report needs a non-empty series")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "series": [[m, v] for m, v in self.series],
            "analytic_bound": None if self.analytic_bound is None
            else [[m, v] for m, v in self.analytic_bound],
            "differences": None if self.differences is None
            else [[m, v] for m, v in self.differences],
            "verdict": self.verdict,
            "asymptotic_symbol": None if self.asymptotic_symbol is None
            else self.asymptotic_symbol.to_json(),
            "residual": self.residual,
            "probes": self.probes,
            "certificate": self.certificate,
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        bound = dict(self.analytic_bound or [])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "value", "bound"])
        for m, v in self.series:
            b = bound.get(m)
            w.writerow([m, repr(float(v)), "" if b is None else repr(float(b))])
        return buf.getvalue()


# -- norms ------------------------------------------------------------------


def _power_norm(M: np.ndarray, tol: float = 1e-10, max_iter: int = 10_000) -> float:
    """Power iteration on M*M from the all-ones vector.

    Stops once the eigen-residual ||M*M x - s x|| falls below tol * s.
    """
    if M.size == 0 or not np.any(M):
        return 0.0
    x = np.ones(M.shape[1], dtype=complex)
    x /= np.linalg.norm(x)
    for _ in range(max_iter):
        y = M.conj().T @ (M @ x)
        s = float(np.real(np.vdot(x, y)))
        if s <= 0.0:
            return 0.0
        if np.linalg.norm(y - s * x) <= tol * s:
            break
        x = y / np.linalg.norm(y)
    return float(np.linalg.norm(M @ x))


def block_norm(A: TruncatedOperator, d: int | None = None) -> float:
    """Largest singular value of the orthonormal matrix on the degree-<=d block.

    Power iteration on M*M from the all-ones vector.  Defaults to the valid block.
    """
    d = A.valid_degree if d is None else d
    if d < 0:
        raise TrustExhausted("operator has no certified block")
    return _power_norm(A.orthonormal(d))


def _vec_norm_on(x, basis, d) -> float:
    if d < 0:
        return 0.0
    idx = basis.block(d)
    w = basis.weights_float[idx]
    return float(np.sqrt(np.sum(np.abs(_to_complex(np.asarray(x))[idx]) ** 2 * w)))


def _truncate(x: np.ndarray, basis, d: int) -> np.ndarray:
    y = _to_complex(np.asarray(x)).copy()
    y[len(basis.block(d)):] = 0
    return y


def _input_degree(A: TruncatedOperator) -> int:
    """Largest input degree whose full image lies in the certified rows of A."""
    if A.growth is None:
        return min(A.valid_cols, A.valid_rows)
    a, b = A.growth
    best = -1
    for d in range(A.valid_cols + 1):
        if a * d + b <= A.valid_rows:
            best = d
    return best


def _probe_norm(A: TruncatedOperator, x) -> float | None:
    """||A P_d x|| measured on the certified rows, d as large as the growth bound allows.

    Returns None when the truncation would remove part of a low-degree probe
    (nothing certified can be said about it any more).
    """
    d = _input_degree(A)
    full = _to_complex(np.asarray(x))
    if d < 0:
        return None
    xt = _truncate(full, A.basis, d)
    if not np.any(xt) and np.any(full):
        return None
    y = apply(A.to_float(), xt)
    return _vec_norm_on(y, A.basis, A.valid_rows)


def _pairing(A: TruncatedOperator, x, y) -> float | None:
    """|<A x, y>| / (||x|| ||y||) for certified low-degree probes."""
    d = _input_degree(A)
    full = _to_complex(np.asarray(x))
    if d < 0 or np.any(full[len(A.basis.block(d)):]):
        return None
    Ax = apply(A.to_float(), full)
    w = A.basis.weights_float
    rows = len(A.basis.block(A.valid_rows))
    yv = _to_complex(np.asarray(y))
    if np.any(yv[rows:]):
        return None
    nx = np.sqrt(np.sum(np.abs(full) ** 2 * w))
    ny = np.sqrt(np.sum(np.abs(yv) ** 2 * w))
    return float(abs(np.sum(Ax * np.conj(yv) * w)) / (nx * ny))


# -- verdicts ---------------------------------------------------------------


def _tail(values):
    k = max(1, -(-len(values) // 3))
    return values[-k:]


def _nonincreasing_tail(values, slack=1e-12) -> bool:
    t = _tail(values)
    return all(b <= a + slack * max(1.0, abs(a)) for a, b in zip(t, t[1:]))


def _to_zero(values) -> bool:
    return bool(values) and values[-1] < ZERO_TOL and _nonincreasing_tail(values)


def _persists(values) -> bool:
    return len(values) >= 2 and all(v > PERSIST_LEVEL for v in _tail(values))


def _decays(values) -> bool:
    if len(values) < 2:
        return False
    if _to_zero(values):
        return True
    return _nonincreasing_tail(values) and values[-1] < PERSIST_LEVEL * values[0]


def _bound_certifies(bound) -> bool:
    """An analytic bound c * s^m certifies decay to zero when s < 1."""
    vals = [v for _, v in bound]
    if vals[-1] < ZERO_TOL:
        return True
    return len(vals) >= 2 and all(b < a for a, b in zip(vals, vals[1:]) if a > 0)


def decide_verdict(series, differences=None, residual=None, bound=None,
                   persistent=None, decaying=None) -> str:
    """Classify a finite iterate series.

    * converges-to-zero: last value < 1e-6, non-increasing over the final
      third, and (when an analytic bound is attached) the bound decays;
    * converges-to-toeplitz: the difference series meets the same rule and
      the Toeplitz defect of the last iterate is < 1e-6;
    * non-convergent: some probe series stays above 0.5 over its final third
      while another probe decays;
    * inconclusive otherwise.
    """
    values = [v for _, v in series]
    if _to_zero(values) and (bound is None or _bound_certifies(bound)):
        return "converges-to-zero"
    if differences and residual is not None:
        dvals = [v for _, v in differences]
        if _to_zero(dvals) and residual < ZERO_TOL:
            return "converges-to-toeplitz"
    persistent = persistent or []
    decaying = decaying or []
    if any(_persists(p) for p in persistent) and any(_decays(q) for q in decaying):
        return "non-convergent"
    return "inconclusive"


# -- probes -----------------------------------------------------------------


def default_probes(basis) -> dict:
    """Monomials of degree <= 2 and kernel vectors at 0.3 e_1 and 0.5 e_2 (0.5 e_1 if n = 1)."""
    n = basis.n
    probes = {}
    for d in range(min(2, basis.max_degree) + 1):
        for alpha in multi_indices_of_degree(n, d):
            probes["z^" + "".join(map(str, alpha))] = coefficient_vector({alpha: 1}, basis)
    for r, j in ((0.3, 0), (0.5, 1 if n > 1 else 0)):
        a = [0.0] * n
        a[j] = r
        probes[f"K[{r}e{j + 1}]"] = kernel_vector(a, basis)
    return probes


def _monomial_probes(basis) -> list:
    return [coefficient_vector({alpha: 1}, basis)
            for d in range(min(2, basis.max_degree) + 1)
            for alpha in multi_indices_of_degree(basis.n, d)]


def _resolve_probes(X, basis) -> dict:
    if X is None:
        return default_probes(basis)
    items = X.items() if isinstance(X, dict) else ((f"x{k}", v) for k, v in enumerate(X))
    probes = {str(k): coefficient_vector(v, basis) for k, v in items}
    if not probes:
        raise ValueError("at least one test vector is required")
    return probes


def _available(values):
    """Prefix of a series up to the first uncertified (None) entry."""
    out = []
    for v in values:
        if v is None:
            break
        out.append(v)
    return out


def _max_series(per_vector) -> list:
    length = max((len(v) for v in per_vector), default=0)
    return [(m, max(v[m - 1] for v in per_vector if len(v) >= m)) for m in range(1, length + 1)]


def _weak_series(operators, basis) -> list:
    mons = _monomial_probes(basis)
    out = []
    for Y in operators:
        vals = [_pairing(Y, x, y) for x in mons for y in mons]
        vals = [v for v in vals if v is not None]
        if not vals:
            break
        out.append(max(vals))
    return out


def _sequence(A: TruncatedOperator, m_max: int, cesaro: bool):
    """Operators for m = 1..m_max plus the next one (or None if trust runs out)."""
    nxt_m = m_max + 1 if A.valid_degree >= m_max + 1 else m_max
    ops = cesaro_means(A, nxt_m) if cesaro else phi_iterate(A, nxt_m)
    if nxt_m == m_max:
        return ops, None
    return ops[:-1], ops[-1]


def _differences(operators, extra):
    seq = list(operators) + ([extra] if extra is not None else [])
    # differences are only ever measured in floating point
    seq = [X.to_float() for X in seq]
    return [add(seq[m - 1], scale(-1, seq[m])) for m in range(1, len(seq))]


def _defect(X: TruncatedOperator) -> float | None:
    if X.valid_degree < 1:
        return None
    return block_norm(add(phi_apply(X), scale(-1, X)))


def _linear_bound(A: TruncatedOperator, m_max: int, samples: int, seed: int):
    origin = A.origin
    if not (isinstance(origin, tuple) and origin and origin[0] == "composition"):
        return None, None
    phi = origin[1]
    if not phi.is_linear():
        return None, None
    f = pairing_symbol(phi, PolySelfMap.identity(phi.n))
    sup = sup_norm_estimate(f, samples, seed)
    base = block_norm(A)
    bound = [(m, sup ** m * base) for m in range(1, m_max + 1)]
    return bound, {"sup_norm_estimate": sup, "base_norm": base, "samples": samples, "seed": seed}


def uat_sequence(A: TruncatedOperator, m_max: int, *, sup_samples: int = 100_000,
                 seed: int = 0, s_max: int = 12) -> ConvergenceReport:
    """Norm series ||Phi^m(A)|| on the certified blocks, m = 1..m_max.

    When A is the composition operator of a linear map, the report carries
    the analytic bound (sup|<Az,z>|)^m ||C_phi|| and, if the map has a
    unimodular eigenvalue, the lower-bound certificate q_s(f^m) <= ||Phi^m(A)||.
    """
    iterates, extra = _sequence(A, m_max, cesaro=False)
    series = [(m, block_norm(X)) for m, X in enumerate(iterates, start=1)]
    diffs = [(m, block_norm(Y)) for m, Y in enumerate(_differences(iterates, extra), start=1)
             if Y.valid_degree >= 0]
    residual = _defect(iterates[-1])
    if residual is None:
        residual = diffs[-1][1] if diffs else series[-1][1]

    bound, bound_info = _linear_bound(A, m_max, sup_samples, seed)
    certificate = None
    persistent = [[v for _, v in series]]
    if bound is not None:
        phi = A.origin[1]
        verdict = linear_uat_classifier(phi.matrix(), check_identity=False)
        certificate = {"classifier": verdict.to_json(), "bound": bound_info}
        if not verdict.uat:
            f = pairing_symbol(phi, PolySelfMap.identity(phi.n))
            zeta = verdict.eigenvector
            eta = verdict.eigenvalue * zeta
            lower = [(m, lower_bound_probe(f ** m, phi, zeta, eta, s_max)[-1])
                     for m in range(1, m_max + 1)]
            certificate["lower_bound"] = [[m, q] for m, q in lower]
            certificate["s_max"] = s_max
            persistent.append([q for _, q in lower])
    # strong probes on the same iterates are the decaying witnesses
    decaying = [_available([_probe_norm(X, x) for X in iterates])
                for x in default_probes(A.basis).values()]

    report = ConvergenceReport(
        mode="uniform",
        series=series,
        verdict=decide_verdict(series, diffs, residual, bound, persistent, decaying),
        residual=residual,
        analytic_bound=bound,
        differences=diffs,
        certificate=certificate,
    )
    if report.verdict == "converges-to-toeplitz" and iterates[-1].valid_degree >= 1:
        report.asymptotic_symbol, _ = extract_symbol(iterates[-1])
    return report


def _probe_report(mode, A, X, m_max, cesaro) -> ConvergenceReport:
    probes = _resolve_probes(X, A.basis)
    operators, extra = _sequence(A, m_max, cesaro)
    diff_ops = _differences(operators, extra)
    table = {}
    for label, x in probes.items():
        table[label] = {
            "norm": _available([_probe_norm(Y, x) for Y in operators]),
            "difference": _available([_probe_norm(Y, x) for Y in diff_ops]),
        }
    norms = [t["norm"] for t in table.values() if t["norm"]]
    if not norms:
        raise TrustExhausted("no probe vector is certified at m = 1")
    series = _max_series(norms)
    differences = _max_series([t["difference"] for t in table.values() if t["difference"]])
    residual = _defect(operators[-1])
    if residual is None:
        residual = differences[-1][1] if differences else series[-1][1]
    weak = _weak_series(operators, A.basis)
    persistent = norms + [t["difference"] for t in table.values()]
    verdict = decide_verdict(series, differences, residual, None, persistent, norms + [weak])
    report = ConvergenceReport(mode=mode, series=series, verdict=verdict, residual=residual,
                               differences=differences or None, probes=table,
                               certificate={"weak_proxy": weak})
    if verdict == "converges-to-toeplitz" and operators[-1].valid_degree >= 1:
        report.asymptotic_symbol, _ = extract_symbol(operators[-1])
    return report


def sat_probe(A: TruncatedOperator, X=None, m_max: int = 4) -> ConvergenceReport:
    """Strong-topology probe: ||Phi^m(A) x|| and ||Phi^m(A) x - Phi^{m+1}(A) x|| per vector.

    Each input is truncated to the largest degree whose image is certified,
    and the output is measured on the certified rows.  A series stops at the
    first m where that is no longer possible.
    """
    return _probe_report("strong", A, X, m_max, cesaro=False)


def cesaro_probe(A: TruncatedOperator, X=None, m_max: int = 4) -> ConvergenceReport:
    """Like :func:`sat_probe` but on the means (1/m) sum_{j<=m} Phi^j(A)."""
    return _probe_report("cesaro", A, X, m_max, cesaro=True)


def weak_probe(A: TruncatedOperator, m_max: int = 4) -> ConvergenceReport:
    """Entrywise proxy for weak convergence: max |<Phi^m(A) x, y>| over low monomials."""
    operators, extra = _sequence(A, m_max, cesaro=False)
    weak = _weak_series(operators, A.basis)
    if not weak:
        raise TrustExhausted("no certified entries at m = 1")
    series = list(enumerate(weak, start=1))
    diffs = list(enumerate(_weak_series(_differences(operators, extra), A.basis), start=1))
    residual = _defect(operators[-1])
    if residual is None:
        residual = diffs[-1][1] if diffs else series[-1][1]
    verdict = decide_verdict(series, diffs, residual)
    return ConvergenceReport(mode="weak-proxy", series=series, verdict=verdict,
                             residual=residual, differences=diffs or None)


# -- asymptotic symbol ------------------------------------------------------


def _canonical_terms(n: int, h: int):
    """Bi-degree <= h monomials z^mu zbar^nu not divisible by z_1 zbar_1, grouped by mu - nu."""
    groups = {}
    for dm in range(h + 1):
        for mu in multi_indices_of_degree(n, dm):
            for dn in range(h + 1):
                for nu in multi_indices_of_degree(n, dn):
                    if mu[0] and nu[0]:
                        continue
                    k = tuple(a - b for a, b in zip(mu, nu))
                    groups.setdefault(k, []).append((mu, nu))
    return groups


def _solve_exact(G, rhs):
    """Gaussian elimination over QQi; free variables are set to zero."""
    n = len(rhs)
    M = [list(row) + [r] for row, r in zip(G, rhs)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, n) if M[i][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        p = M[row][col]
        M[row] = [v / p for v in M[row]]
        for i in range(n):
            if i != row and M[i][col]:
                c = M[i][col]
                M[i] = [a - c * b for a, b in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
    x = [QQi(0)] * n
    for r, col in enumerate(pivots):
        x[col] = M[r][n]
    return x


def extract_symbol(A: TruncatedOperator):
    """Least-squares Toeplitz symbol for A's raw entries, plus the defect ||Phi(A) - A||.

    The fit uses monomials z^mu zbar^nu with |mu|, |nu| <= v/2 that are not
    divisible by z_1 zbar_1; these represent every trigonometric polynomial
    on the sphere exactly once, so an exactly Toeplitz input is recovered
    exactly (in that normal form).
    """
    basis = A.basis
    v = A.valid_degree
    n = basis.n
    if v < 1:
        raise TrustExhausted("symbol extraction needs valid_degree >= 1")
    h = v // 2
    idx = basis.block(v)
    cells = [basis[i] for i in idx]
    coeffs = {}
    from .basis import monomial_norm_sq

    for k, terms in _canonical_terms(n, h).items():
        rows = []
        for j, beta in zip(idx, cells):
            gamma = tuple(b + t for b, t in zip(beta, k))
            if min(gamma) < 0:
                continue
            i = basis.position.get(gamma)
            if i is None or sum(gamma) > v:
                continue
            rows.append((i, j, beta))
        if not rows:
            continue
        W = [[monomial_norm_sq(tuple(m + b for m, b in zip(mu, beta)), n) for mu, _ in terms]
             for _, _, beta in rows]
        r = [A.R[i, j] for i, j, _ in rows]
        if A.exact:
            G = [[sum((W[t][a] * W[t][b] for t in range(len(rows))), mpq(0))
                  for b in range(len(terms))] for a in range(len(terms))]
            rhs = [sum((r[t] * W[t][a] for t in range(len(rows))), QQi(0)) for a in range(len(terms))]
            sol = _solve_exact([[QQi(g) for g in row] for row in G], rhs)
        else:
            Wf = np.array([[float(w) for w in row] for row in W])
            sol, *_ = np.linalg.lstsq(Wf, np.array(r, dtype=complex), rcond=None)
            sol = [complex(s) if abs(s) > 1e-14 else 0 for s in sol]
        for (mu, nu), c in zip(terms, sol):
            if c != 0:
                coeffs[(mu, nu)] = c
    symbol = SphereSymbol(n, coeffs)
    residual = block_norm(add(phi_apply(A), scale(-1, A))) if v >= 1 else 0.0
    return symbol, residual


# -- lower bound and linear classification ----------------------------------


def _holomorphic_poly_norm_sq(p: dict, n: int):
    from .basis import monomial_norm_sq

    exact = all(isinstance(c, QQi) for c in p.values())
    if exact:
        return sum((c.abs2() * monomial_norm_sq(a, n) for a, c in p.items()), mpq(0))
    return sum(abs(complex(c)) ** 2 * float(monomial_norm_sq(a, n)) for a, c in p.items())


def _linear_form(vec, n) -> dict:
    """z -> <z, vec> = sum_j z_j conj(vec_j) as a polynomial."""
    from .exact import as_scalar

    out = {}
    for j, c in enumerate(vec):
        c = as_scalar(c).conjugate()
        if c != 0:
            out[tuple(int(i == j) for i in range(n))] = c
    return out


def _same_poly(p: dict, q: dict, tol: float = 1e-12) -> bool:
    keys = set(p) | set(q)
    for k in keys:
        a, b = p.get(k, 0), q.get(k, 0)
        diff = a - b
        if isinstance(diff, QQi):
            if diff:
                return False
        elif abs(complex(diff)) > tol:
            return False
    return True


def lower_bound_probe(f: SphereSymbol, phi: PolySelfMap, zeta, eta, s_max: int) -> list:
    """q_s = |<T_f C_phi g_s, h_s>| / (||g_s|| ||h_s||), s = 1..s_max.

    g_s(z) = (1 + <z, eta>)^s and h_s = C_phi g_s.  Requires <phi(z), eta> = <z, zeta>
    as polynomials; each q_s is a lower bound for ||T_f C_phi||.
    """
    n = phi.n
    if f.n != n or len(zeta) != n or len(eta) != n:
        raise ValueError("dimension mismatch")
    pair = {}
    for comp, e in zip(phi.components, eta):
        for a, c in comp.items():
            from .exact import as_scalar

            pair[a] = pair.get(a, 0) + c * as_scalar(e).conjugate()
    if not _same_poly(pair, _linear_form(zeta, n)):
        raise ValueError("hypothesis <phi(z), eta> = <z, zeta> fails for these points")
    one = {(0,) * n: QQi(1)}
    base = dict(_linear_form(eta, n))
    base[(0,) * n] = base.get((0,) * n, 0) + QQi(1)
    out = []
    for s in range(1, s_max + 1):
        g = poly_pow(base, s, n) if s else one
        h = phi.compose_poly(g)
        H = SphereSymbol.holomorphic(n, h)
        num = sphere_integral(f * H * H.conj())
        den = float(_holomorphic_poly_norm_sq(g, n)) * float(_holomorphic_poly_norm_sq(h, n))
        out.append(abs(complex(num)) / den ** 0.5)
    return out


@dataclass
class LinearUATVerdict:
    uat: bool
    spectral_radius: float
    eigenvalue: complex | None = None
    eigenvector: np.ndarray | None = None
    adjoint_residual: float | None = None

    def to_json(self) -> dict:
        out = {"verdict": "uat" if self.uat else "not-uat", "spectral_radius": self.spectral_radius}
        if self.eigenvalue is not None:
            out["eigenvalue"] = [self.eigenvalue.real, self.eigenvalue.imag]
            out["eigenvector"] = [[float(z.real), float(z.imag)] for z in self.eigenvector]
            out["adjoint_residual"] = self.adjoint_residual
        return out


def linear_uat_classifier(A, check_identity: bool = True) -> LinearUATVerdict:
    """C_{Az} is UAT exactly when every eigenvalue of A lies in the open unit disk.

    For a unimodular eigenvalue lambda with unit eigenvector zeta the report
    also checks A* zeta = conj(lambda) zeta, the input the lower-bound probe needs.
    """
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("A must be square")
    if np.linalg.norm(A, 2) > 1 + 1e-10:
        raise ValueError("||A|| > 1: z -> Az is not a self-map of the ball")
    if check_identity and np.allclose(A, np.eye(n), rtol=0, atol=1e-14):
        raise ValueError("the identity map is excluded")
    vals, vecs = np.linalg.eig(A)
    k = int(np.argmax(np.abs(vals)))
    rho = float(abs(vals[k]))
    if rho < 1 - 1e-8:
        return LinearUATVerdict(True, rho)
    lam = complex(vals[k])
    zeta = vecs[:, k] / np.linalg.norm(vecs[:, k])
    # fix the phase so the largest component is real positive
    j = int(np.argmax(np.abs(zeta)))
    zeta = zeta * abs(zeta[j]) / zeta[j]
    resid = float(np.linalg.norm(A.conj().T @ zeta - np.conj(lam) * zeta))
    return LinearUATVerdict(False, rho, lam, zeta, resid)


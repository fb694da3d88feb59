"""Truncated operators on H^2 in raw-Gram form.

An operator A is stored as ``R[g, b] = <A z^b, z^g>`` against unnormalized
monomials.  Dividing row g by omega(g) gives the coefficient matrix (columns
are the expansions of A z^b); dividing by sqrt(omega(g) omega(b)) gives the
matrix in the orthonormal monomial basis.

Truncation bookkeeping
----------------------
``valid_rows``/``valid_cols`` (r, c): entry (g, b) is certified exact when
|g| <= r and |b| <= c.  ``valid_degree`` = min(r, c) is the trusted square
block.  ``growth`` = (a, b) certifies deg(A p) <= a*deg(p) + b for every
polynomial p; ``cogrowth`` is the same for the adjoint.  ``None`` means no
bound is known.  Products only trust columns whose images stay inside the
certified part of both factors.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, replace

import numpy as np
from gmpy2 import mpq

from .basis import BasisTable, monomial_norm_sq
from .exact import QQi, as_scalar, dump_number
from .symbols import PolySelfMap, SphereSymbol, poly_mul

__all__ = [
    "TruncatedOperator",
    "TrustExhausted",
    "identity_op",
    "zero_op",
    "toeplitz_op",
    "composition_op",
    "adjoint",
    "multiply",
    "rank_one",
    "add",
    "scale",
    "apply",
    "kernel_vector",
    "coefficient_vector",
    "vector_norm",
    "vector_norm_sq",
]

ZERO = QQi(0)
ONE = QQi(1)


class TrustExhausted(ValueError):
    """Raised when an operation needs more certified degrees than remain."""


def _zeros(size: int, exact: bool = True) -> np.ndarray:
    if exact:
        return np.full((size, size), ZERO, dtype=object)
    return np.zeros((size, size), dtype=complex)


def _to_complex(X: np.ndarray) -> np.ndarray:
    if X.dtype != object:
        return X.astype(complex, copy=False)
    return np.array([complex(v) for v in X.ravel()], dtype=complex).reshape(X.shape)


def _finalize(X: np.ndarray) -> np.ndarray:
    """Keep an object array only if every entry is exact."""
    if X.dtype == object and all(isinstance(v, QQi) for v in X.ravel()):
        return X
    return _to_complex(X)


def _nonzero_mask(X: np.ndarray) -> np.ndarray:
    if X.dtype == object:
        return np.frompyfunc(bool, 1, 1)(X).astype(bool)
    return X != 0


def _exact_matmul(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Sparse-aware product of two object matrices of QQi."""
    m, k = X.shape
    p = Y.shape[1]
    Xmask = _nonzero_mask(X)
    Ymask = _nonzero_mask(Y)
    xcols = [[(i, X[i, t]) for i in np.flatnonzero(Xmask[:, t])] for t in range(k)]
    out = np.full((m, p), ZERO, dtype=object)
    for j in range(p):
        acc = {}
        for t in np.flatnonzero(Ymask[:, j]):
            y = Y[t, j]
            for i, x in xcols[t]:
                s = acc.get(i)
                acc[i] = x * y if s is None else s + x * y
        for i, v in acc.items():
            out[i, j] = v
    return out


def _times_weight(c, w):
    # keep gmpy2 out of float arithmetic
    return c * w if isinstance(c, QQi) else c * float(w)


def _compose_growth(outer, inner):
    if outer is None or inner is None:
        return None
    a1, b1 = outer
    a2, b2 = inner
    return (a1 * a2, a1 * b2 + b1)


def _max_growth(g1, g2):
    if g1 is None or g2 is None:
        return None
    return (max(g1[0], g2[0]), max(g1[1], g2[1]))


def _phi_growth(g):
    # T_{zbar_j} A T_{z_j}: deg <= a(d+1) + b - 1
    if g is None:
        return None
    a, b = g
    return (a, max(b + a - 1, 0))


@dataclass(frozen=True, eq=False)
class TruncatedOperator:
    basis: BasisTable
    R: np.ndarray = field(repr=False)
    valid_rows: int
    valid_cols: int
    growth: tuple | None = (1, 0)
    cogrowth: tuple | None = (1, 0)
    origin: object = field(default=None, repr=False)

    def __post_init__(self):
        size = len(self.basis)
        if self.R.shape != (size, size):
            raise ValueError(f"matrix shape {self.R.shape} does not match basis size {size}")
        D = self.basis.max_degree
        object.__setattr__(self, "valid_rows", max(min(self.valid_rows, D), -1))
        object.__setattr__(self, "valid_cols", max(min(self.valid_cols, D), -1))

    @property
    def valid_degree(self) -> int:
        return min(self.valid_rows, self.valid_cols)

    @property
    def exact(self) -> bool:
        return self.R.dtype == object

    @property
    def size(self) -> int:
        return len(self.basis)

    def raw(self) -> np.ndarray:
        """Raw Gram matrix as complex floats (cached; do not mutate)."""
        cache = self.__dict__.get("_raw")
        if cache is None:
            cache = _to_complex(self.R)
            object.__setattr__(self, "_raw", cache)
        return cache

    def coefficients(self) -> np.ndarray:
        """Coefficient matrix R / omega(row), exact when possible."""
        w = np.array(self.basis.weights, dtype=object)
        if self.exact:
            return self.R / w[:, None]
        return self.R / self.basis.weights_float[:, None]

    def orthonormal(self, d: int | None = None) -> np.ndarray:
        """Float matrix in the orthonormal monomial basis, restricted to degree <= d."""
        s = np.sqrt(self.basis.weights_float)
        M = self.raw() / np.outer(s, s)
        if d is None:
            return M
        idx = self.basis.block(d)
        return M[np.ix_(idx, idx)]

    def block(self, d: int | None = None) -> np.ndarray:
        """Raw entries on the degree-<=d square block (default: the valid block)."""
        d = self.valid_degree if d is None else d
        idx = self.basis.block(d)
        return self.R[np.ix_(idx, idx)]

    def equals(self, other: "TruncatedOperator", d: int | None = None, atol: float = 0.0) -> bool:
        """Entrywise equality on the common valid block (exact when both are exact)."""
        if other.basis != self.basis:
            raise ValueError("operators live on different bases")
        if d is None:
            d = min(self.valid_degree, other.valid_degree)
        if d < 0:
            return True
        X, Y = self.block(d), other.block(d)
        if self.exact and other.exact and atol == 0.0:
            return bool(np.all(X == Y))
        return bool(np.allclose(_to_complex(X), _to_complex(Y), rtol=0.0, atol=atol))

    def with_origin(self, origin) -> "TruncatedOperator":
        return replace(self, origin=origin)

    def to_float(self) -> "TruncatedOperator":
        if not self.exact:
            return self
        cache = self.__dict__.get("_float")
        if cache is None:
            cache = replace(self, R=self.raw())
            object.__setattr__(self, "_float", cache)
        return cache

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __matmul__(self, other):
        return multiply(self, other)

    # serialization
    def to_json(self) -> dict:
        entries = []
        mask = _nonzero_mask(self.R)
        for i, j in zip(*np.nonzero(mask)):
            v = dump_number(self.R[i, j])
            entries.append([list(self.basis[i]), list(self.basis[j]), v["re"], v["im"]])
        return {
            "basis": self.basis.describe(),
            "exact": self.exact,
            "valid_rows": self.valid_rows,
            "valid_cols": self.valid_cols,
            "valid_degree": self.valid_degree,
            "growth": list(self.growth) if self.growth is not None else None,
            "cogrowth": list(self.cogrowth) if self.cogrowth is not None else None,
            "entries": entries,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedOperator":
        from .basis import enumerate_basis
        from .exact import parse_number

        basis = enumerate_basis(obj["basis"]["n"], obj["basis"]["D"])
        R = _zeros(len(basis), exact=True)
        for g, b, re, im in obj["entries"]:
            R[basis.index(g), basis.index(b)] = parse_number({"re": re, "im": im})
        growth = tuple(obj["growth"]) if obj.get("growth") is not None else None
        cogrowth = tuple(obj["cogrowth"]) if obj.get("cogrowth") is not None else None
        return cls(basis, _finalize(R), obj["valid_rows"], obj["valid_cols"], growth, cogrowth)

    def to_csv(self) -> str:
        """Orthonormal-basis entries as CSV rows: gamma,beta,re,im."""
        M = self.orthonormal()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["gamma", "beta", "re", "im"])
        for i, j in zip(*np.nonzero(M)):
            g = ";".join(map(str, self.basis[i]))
            b = ";".join(map(str, self.basis[j]))
            w.writerow([g, b, repr(float(M[i, j].real)), repr(float(M[i, j].imag))])
        return buf.getvalue()


# -- builders ---------------------------------------------------------------


def identity_op(basis: BasisTable) -> TruncatedOperator:
    R = _zeros(len(basis))
    for i, w in enumerate(basis.weights):
        R[i, i] = QQi(w)
    D = basis.max_degree
    return TruncatedOperator(basis, R, D, D, (1, 0), (1, 0), origin=("identity",))


def zero_op(basis: BasisTable) -> TruncatedOperator:
    D = basis.max_degree
    return TruncatedOperator(basis, _zeros(len(basis)), D, D, (0, 0), (0, 0), origin=("zero",))


def toeplitz_op(f: SphereSymbol, basis: BasisTable) -> TruncatedOperator:
    """T_f with R[g, b] = sum over mu + b = nu + g of c[mu, nu] * omega(mu + b)."""
    if f.n != basis.n:
        raise ValueError(f"symbol dimension {f.n} does not match basis dimension {basis.n}")
    n, D = basis.n, basis.max_degree
    R = _zeros(len(basis))
    for (mu, nu), c in f.coeffs.items():
        for j, beta in enumerate(basis.indices):
            top = tuple(m + b for m, b in zip(mu, beta))
            gamma = tuple(t - v for t, v in zip(top, nu))
            if min(gamma) < 0:
                continue
            i = basis.position.get(gamma)
            if i is None:
                continue
            R[i, j] = R[i, j] + _times_weight(c, monomial_norm_sq(top, n))
    growth = (1, f.net_degree)
    cogrowth = (1, f.conj().net_degree)
    return TruncatedOperator(basis, _finalize(R), D, D, growth, cogrowth, origin=("toeplitz", f))


def composition_op(phi: PolySelfMap, basis: BasisTable) -> TruncatedOperator:
    """C_phi with R[g, a] = coeff_g(phi^a) * omega(g); output degrees above D are dropped."""
    if phi.n != basis.n:
        raise ValueError(f"self-map dimension {phi.n} does not match basis dimension {basis.n}")
    n, D = basis.n, basis.max_degree
    R = _zeros(len(basis))
    powers = {(0,) * n: {(0,) * n: ONE}}
    for j, alpha in enumerate(basis.indices):
        if alpha not in powers:
            k = next(i for i, a in enumerate(alpha) if a)
            prev = tuple(a - (i == k) for i, a in enumerate(alpha))
            # phi^alpha = phi^prev * phi_k, truncated to degree <= D
            prod = poly_mul(powers[prev], phi.components[k])
            powers[alpha] = {g: c for g, c in prod.items() if sum(g) <= D}
        for gamma, c in powers[alpha].items():
            i = basis.position[gamma]
            R[i, j] = _times_weight(c, basis.weights[i])
    k = phi.degree
    cogrowth = (1, 0) if phi.vanishes_at_origin() else None
    return TruncatedOperator(basis, _finalize(R), D, D, (k, 0), cogrowth, origin=("composition", phi))


def rank_one(u, v, basis: BasisTable) -> TruncatedOperator:
    """u (x) v : h -> <h, v> u for coefficient vectors u, v on the basis."""
    u = coefficient_vector(u, basis)
    v = coefficient_vector(v, basis)
    w = np.array(basis.weights, dtype=object)
    left = u * w
    right = np.array([x.conjugate() for x in v], dtype=object) * w
    if u.dtype == object and v.dtype == object:
        R = np.outer(left, right)
    else:
        R = np.outer(_to_complex(left), _to_complex(right))
    D = basis.max_degree
    deg = lambda x: max((sum(basis[i]) for i in np.flatnonzero(_nonzero_mask(x))), default=0)
    return TruncatedOperator(basis, R, D, D, (0, deg(u)), (0, deg(v)), origin=("rank_one",))


# -- algebra ----------------------------------------------------------------


def adjoint(A: TruncatedOperator) -> TruncatedOperator:
    """R_{A*}[g, b] = conj(R_A[b, g])."""
    R = np.conjugate(A.R).T.copy()
    return TruncatedOperator(A.basis, R, A.valid_cols, A.valid_rows, A.cogrowth, A.growth,
                             origin=("adjoint", A.origin))


def _product_cols(A: TruncatedOperator, B: TruncatedOperator) -> int:
    if B.growth is None:
        return -1
    a, b = B.growth
    limit = min(B.valid_rows, A.valid_cols)
    best = -1
    for d in range(B.valid_cols + 1):
        if a * d + b <= limit:
            best = d
        else:
            break
    return best


def multiply(A: TruncatedOperator, B: TruncatedOperator) -> TruncatedOperator:
    """A o B (B applied first): R_AB = R_A @ (R_B / omega(rows))."""
    if A.basis != B.basis:
        raise ValueError("operators live on different bases")
    CB = B.coefficients()
    if A.exact and B.exact:
        R = _exact_matmul(A.R, CB)
    else:
        R = _to_complex(A.R) @ _to_complex(CB)
    return TruncatedOperator(
        A.basis, R, A.valid_rows, _product_cols(A, B),
        _compose_growth(A.growth, B.growth), _compose_growth(B.cogrowth, A.cogrowth),
        origin=("product", A.origin, B.origin),
    )


def add(A: TruncatedOperator, B: TruncatedOperator) -> TruncatedOperator:
    if A.basis != B.basis:
        raise ValueError("operators live on different bases")
    if A.exact and B.exact:
        R = A.R + B.R
    else:
        R = _to_complex(A.R) + _to_complex(B.R)
    return TruncatedOperator(A.basis, R, min(A.valid_rows, B.valid_rows),
                             min(A.valid_cols, B.valid_cols),
                             _max_growth(A.growth, B.growth), _max_growth(A.cogrowth, B.cogrowth),
                             origin=("sum", A.origin, B.origin))


def scale(c, A: TruncatedOperator) -> TruncatedOperator:
    c = as_scalar(c)
    if A.exact and isinstance(c, QQi):
        R = A.R * c
    else:
        R = _to_complex(A.R) * complex(c)
    return replace(A, R=R, origin=("scale", c, A.origin))


# -- vectors ----------------------------------------------------------------


def coefficient_vector(x, basis: BasisTable) -> np.ndarray:
    """Normalize a coefficient vector (array, {alpha: c} dict or holomorphic SphereSymbol)."""
    if isinstance(x, SphereSymbol):
        if x.antiholomorphic_degree:
            raise ValueError("only holomorphic symbols define Hardy-space vectors")
        x = {mu: c for (mu, _), c in x.coeffs.items()}
    if isinstance(x, dict):
        out = np.full(len(basis), ZERO, dtype=object)
        for a, c in x.items():
            i = basis.position.get(tuple(a))
            if i is None:
                raise ValueError(f"monomial {a} is outside the basis")
            out[i] = out[i] + as_scalar(c)
        return _finalize_vec(out)
    x = np.asarray(x)
    if x.shape != (len(basis),):
        raise ValueError(f"vector has shape {x.shape}, basis has size {len(basis)}")
    if x.dtype == object:
        return _finalize_vec(np.array([as_scalar(v) for v in x], dtype=object))
    return x.astype(complex)


def _finalize_vec(x: np.ndarray) -> np.ndarray:
    if x.dtype == object and all(isinstance(v, QQi) for v in x):
        return x
    return np.array([complex(v) for v in x], dtype=complex)


def apply(A: TruncatedOperator, x) -> np.ndarray:
    """Coefficient vector of A x."""
    x = coefficient_vector(x, A.basis)
    C = A.coefficients()
    if A.exact and x.dtype == object:
        return np.array([sum((C[i, j] * x[j] for j in np.flatnonzero(_nonzero_mask(x))), ZERO)
                         for i in range(len(x))], dtype=object)
    return _to_complex(C) @ _to_complex(x)


def vector_norm_sq(x, basis: BasisTable, d: int | None = None):
    """sum |x_a|^2 omega(a) over |a| <= d (exact for exact vectors)."""
    x = coefficient_vector(x, basis)
    idx = basis.block(basis.max_degree if d is None else d)
    if x.dtype == object:
        return sum((x[i].abs2() * basis.weights[i] for i in idx), mpq(0))
    w = basis.weights_float
    return float(np.sum(np.abs(x[idx]) ** 2 * w[idx]))


def vector_norm(x, basis: BasisTable, d: int | None = None) -> float:
    return float(vector_norm_sq(x, basis, d)) ** 0.5


def kernel_vector(a, basis: BasisTable) -> np.ndarray:
    """Degree-<=D truncation of the reproducing kernel K_a: coefficients conj(a^alpha)/omega(alpha)."""
    a = [as_scalar(t) for t in a]
    if len(a) != basis.n:
        raise ValueError(f"point has dimension {len(a)}, basis has {basis.n}")
    exact = all(isinstance(t, QQi) for t in a)
    norm2 = sum(abs(complex(t)) ** 2 for t in a)
    if exact:
        if sum((t.abs2() for t in a), mpq(0)) >= 1:
            raise ValueError("kernel point must lie in the open unit ball")
    elif norm2 >= 1:
        raise ValueError("kernel point must lie in the open unit ball")
    out = []
    for alpha, w in zip(basis.indices, basis.weights):
        p = QQi(1) if exact else 1 + 0j
        for t, k in zip(a, alpha):
            p = p * (t ** k if exact else complex(t) ** k)
        out.append(p.conjugate() / (w if exact else float(w)))
    return np.array(out, dtype=object if exact else complex)

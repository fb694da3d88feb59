"""Sphere symbols and polynomial self-maps.

A :class:`SphereSymbol` is a finite formal sum ``sum c[mu, nu] z^mu zbar^nu``.
Products and powers are formal: nothing is rewritten with the sphere relation
``sum_j z_j zbar_j = 1``.  The Toeplitz matrix of a symbol does not depend on
the representative, so this costs nothing downstream.

A :class:`PolySelfMap` is an n-tuple of holomorphic polynomials, each stored
as ``{alpha: coefficient}``.
"""
from __future__ import annotations

import numpy as np

from .basis import monomial_norm_sq
from .exact import QQi, as_scalar
from .oracle import sphere_sample

__all__ = [
    "SphereSymbol",
    "PolySelfMap",
    "poly_mul",
    "poly_pow",
    "poly_add",
    "pairing_symbol",
    "symbol_product",
    "symbol_conj",
    "symbol_power",
    "eval_symbol",
    "sphere_integral",
    "sup_norm_estimate",
    "exceptional_set_fraction",
]

SPHERE_TOL = 1e-12


def _add_into(acc, key, value):
    s = acc.get(key)
    acc[key] = value if s is None else s + value


def _canonical(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if v != 0}


def _addv(a, b):
    return tuple(x + y for x, y in zip(a, b))


# -- holomorphic polynomials as {alpha: c} ----------------------------------


def poly_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, v in q.items():
        _add_into(out, k, v)
    return _canonical(out)


def poly_mul(p: dict, q: dict) -> dict:
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            _add_into(out, _addv(a, b), x * y)
    return _canonical(out)


def poly_pow(p: dict, k: int, n: int) -> dict:
    result = {(0,) * n: QQi(1)}
    base = p
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


class SphereSymbol:
    """f = sum over (mu, nu) of c * z^mu * conj(z)^nu, restricted to the sphere."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = int(n)
        clean = {}
        for (mu, nu), c in (coeffs or {}).items():
            mu, nu = tuple(mu), tuple(nu)
            if len(mu) != n or len(nu) != n:
                raise ValueError(f"exponent length mismatch for dimension {n}: {mu}, {nu}")
            _add_into(clean, (mu, nu), as_scalar(c))
        self.coeffs = _canonical(clean)

    # constructors
    @classmethod
    def constant(cls, n, c=1):
        z = (0,) * n
        return cls(n, {(z, z): c})

    @classmethod
    def monomial(cls, mu, nu=None, c=1):
        mu = tuple(mu)
        nu = tuple(nu) if nu is not None else (0,) * len(mu)
        return cls(len(mu), {(mu, nu): c})

    @classmethod
    def coordinate(cls, n, j, conjugate=False):
        e = tuple(int(i == j) for i in range(n))
        z = (0,) * n
        return cls(n, {(z, e) if conjugate else (e, z): 1})

    @classmethod
    def holomorphic(cls, n, poly: dict):
        z = (0,) * n
        return cls(n, {(tuple(a), z): c for a, c in poly.items()})

    @classmethod
    def sphere_one(cls, n):
        """The formal symbol sum_j z_j zbar_j (equal to 1 on the sphere)."""
        return sum((cls.coordinate(n, j) * cls.coordinate(n, j, conjugate=True) for j in range(n)),
                   cls(n))

    # structure
    @property
    def holomorphic_degree(self) -> int:
        return max((sum(mu) for mu, _ in self.coeffs), default=0)

    @property
    def antiholomorphic_degree(self) -> int:
        return max((sum(nu) for _, nu in self.coeffs), default=0)

    @property
    def net_degree(self) -> int:
        """max(|mu| - |nu|) over the terms: how far T_f can raise polynomial degree.

        Negative when every term lowers the degree (T_f then kills constants).
        """
        return max((sum(mu) - sum(nu) for mu, nu in self.coeffs), default=0)

    @property
    def exact(self) -> bool:
        return all(isinstance(c, QQi) for c in self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    # algebra
    def _check(self, other):
        if not isinstance(other, SphereSymbol):
            return SphereSymbol.constant(self.n, other)
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _add_into(out, k, v)
        return SphereSymbol(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SphereSymbol(self.n, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if not isinstance(other, SphereSymbol):
            c = as_scalar(other)
            return SphereSymbol(self.n, {k: v * c for k, v in self.coeffs.items()})
        other = self._check(other)
        out = {}
        for (m1, n1), a in self.coeffs.items():
            for (m2, n2), b in other.coeffs.items():
                _add_into(out, (_addv(m1, m2), _addv(n1, n2)), a * b)
        return SphereSymbol(self.n, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, m: int):
        return symbol_power(self, m)

    def conj(self):
        return SphereSymbol(self.n, {(nu, mu): c.conjugate() for (mu, nu), c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SphereSymbol):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __call__(self, zeta):
        return eval_symbol(self, zeta)

    def __repr__(self):
        if not self.coeffs:
            return f"SphereSymbol(n={self.n}, 0)"
        terms = []
        for (mu, nu), c in sorted(self.coeffs.items()):
            terms.append(f"{c}*z^{mu}*zbar^{nu}")
        return f"SphereSymbol(n={self.n}, " + " + ".join(terms) + ")"

    # serialization: list of [mu, nu, re, im]
    def to_json(self):
        from .exact import dump_number

        out = []
        for (mu, nu), c in sorted(self.coeffs.items()):
            d = dump_number(c)
            out.append([list(mu), list(nu), d["re"], d["im"]])
        return {"n": self.n, "terms": out}

    @classmethod
    def from_json(cls, obj):
        from .exact import parse_number

        coeffs = {}
        for mu, nu, re, im in obj["terms"]:
            _add_into(coeffs, (tuple(mu), tuple(nu)), parse_number({"re": re, "im": im}))
        return cls(obj["n"], coeffs)


class PolySelfMap:
    """Polynomial map z -> (phi_1(z), ..., phi_n(z))."""

    __slots__ = ("n", "components")

    def __init__(self, n: int, components):
        components = list(components)
        if len(components) != n:
            raise ValueError(f"expected {n} components, got {len(components)}")
        comps = []
        for p in components:
            q = {}
            for a, c in p.items():
                a = tuple(a)
                if len(a) != n:
                    raise ValueError(f"exponent {a} has wrong length for dimension {n}")
                _add_into(q, a, as_scalar(c))
            comps.append(_canonical(q))
        self.n = n
        self.components = tuple(comps)

    @classmethod
    def identity(cls, n):
        return cls.linear([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def linear(cls, A):
        """z -> A z for an n x n matrix (rows = output components)."""
        return cls.affine(A, None)

    @classmethod
    def affine(cls, A, b=None):
        n = len(A)
        zero = (0,) * n
        comps = []
        for i in range(n):
            p = {}
            for j in range(n):
                e = tuple(int(k == j) for k in range(n))
                p[e] = A[i][j]
            if b is not None:
                p[zero] = b[i]
            comps.append(p)
        return cls(n, comps)

    @classmethod
    def constant_map(cls, point):
        """The constant map z -> point (also used as the vector eta in pairings)."""
        n = len(point)
        return cls(n, [{(0,) * n: c} for c in point])

    @property
    def degree(self) -> int:
        return max((sum(a) for p in self.components for a in p), default=0)

    @property
    def exact(self) -> bool:
        return all(isinstance(c, QQi) for p in self.components for c in p.values())

    def vanishes_at_origin(self) -> bool:
        zero = (0,) * self.n
        return all(zero not in p for p in self.components)

    def is_linear(self) -> bool:
        return all(sum(a) == 1 for p in self.components for a in p)

    def matrix(self) -> np.ndarray:
        """Coefficient matrix of the linear part (complex floats)."""
        M = np.zeros((self.n, self.n), dtype=complex)
        for i, p in enumerate(self.components):
            for a, c in p.items():
                if sum(a) == 1:
                    M[i, a.index(1)] = complex(c)
        return M

    def power(self, alpha) -> dict:
        """Expand phi^alpha = prod_j phi_j^alpha_j as a polynomial."""
        out = {(0,) * self.n: QQi(1)}
        for j, k in enumerate(alpha):
            if k:
                out = poly_mul(out, poly_pow(self.components[j], k, self.n))
        return out

    def compose_poly(self, p: dict) -> dict:
        """p o phi for a holomorphic polynomial p."""
        out = {}
        for a, c in p.items():
            for b, d in self.power(a).items():
                _add_into(out, b, c * d)
        return _canonical(out)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return np.array([_eval_poly(p, z) for p in self.components])

    def __eq__(self, other):
        return isinstance(other, PolySelfMap) and self.n == other.n and self.components == other.components

    def __hash__(self):
        return hash((self.n, tuple(frozenset(p.items()) for p in self.components)))

    def __repr__(self):
        return f"PolySelfMap(n={self.n}, components={list(self.components)})"

    def to_json(self):
        from .exact import dump_number

        comps = []
        for p in self.components:
            terms = []
            for a, c in sorted(p.items()):
                d = dump_number(c)
                terms.append([list(a), d["re"], d["im"]])
            comps.append(terms)
        return {"n": self.n, "components": comps}

    @classmethod
    def from_json(cls, obj):
        from .exact import parse_number

        comps = []
        for terms in obj["components"]:
            p = {}
            for a, re, im in terms:
                _add_into(p, tuple(a), parse_number({"re": re, "im": im}))
            comps.append(p)
        return cls(obj["n"], comps)


def _eval_poly(p, z):
    """Evaluate a holomorphic polynomial at z of shape (n,) or (N, n)."""
    z = np.asarray(z, dtype=complex)
    total = np.zeros(z.shape[:-1], dtype=complex)
    for a, c in p.items():
        total = total + complex(c) * np.prod(z ** np.array(a), axis=-1)
    return total


def pairing_symbol(phi: PolySelfMap, eta: PolySelfMap) -> SphereSymbol:
    """<phi, eta> = sum_j phi_j * conj(eta_j) as a sphere symbol."""
    if phi.n != eta.n:
        raise ValueError(f"dimension mismatch: {phi.n} vs {eta.n}")
    out = {}
    for p, q in zip(phi.components, eta.components):
        for a, x in p.items():
            for b, y in q.items():
                _add_into(out, (a, b), x * y.conjugate())
    return SphereSymbol(phi.n, out)


def symbol_product(f: SphereSymbol, g: SphereSymbol) -> SphereSymbol:
    return f * g


def symbol_conj(f: SphereSymbol) -> SphereSymbol:
    return f.conj()


def symbol_power(f: SphereSymbol, m: int) -> SphereSymbol:
    if m < 0:
        raise ValueError("symbol powers must be non-negative")
    result = SphereSymbol.constant(f.n, 1)
    base = f
    while m:
        if m & 1:
            result = result * base
        m >>= 1
        if m:
            base = base * base
    return result


def eval_symbol(f: SphereSymbol, zeta):
    """Evaluate f at a sphere point (shape (n,)) or a batch of points (shape (N, n))."""
    z = np.asarray(zeta, dtype=complex)
    if z.shape[-1] != f.n:
        raise ValueError(f"point has dimension {z.shape[-1]}, symbol has {f.n}")
    norms = np.linalg.norm(z, axis=-1)
    if np.any(np.abs(norms - 1.0) > SPHERE_TOL):
        raise ValueError("evaluation point is not on the unit sphere")
    zb = np.conj(z)
    total = np.zeros(z.shape[:-1], dtype=complex)
    maxexp = max((max(max(mu), max(nu)) for mu, nu in f.coeffs), default=0)
    zp = [z[..., j, None] ** np.arange(maxexp + 1) for j in range(f.n)]
    zbp = [zb[..., j, None] ** np.arange(maxexp + 1) for j in range(f.n)]
    for (mu, nu), c in f.coeffs.items():
        term = np.full(z.shape[:-1], complex(c))
        for j in range(f.n):
            if mu[j]:
                term = term * zp[j][..., mu[j]]
            if nu[j]:
                term = term * zbp[j][..., nu[j]]
        total = total + term
    return complex(total) if total.ndim == 0 else total


def sphere_integral(f: SphereSymbol):
    """Exact integral of f over the sphere: only z^mu zbar^mu terms survive."""
    total = QQi(0)
    for (mu, nu), c in f.coeffs.items():
        if mu == nu:
            total = total + c * monomial_norm_sq(mu, f.n)
    return total


def sup_norm_estimate(f: SphereSymbol, N: int = 100_000, seed: int = 0) -> float:
    """Largest |f| over N uniform sphere samples: a lower bound for the sup norm."""
    if N < 1:
        raise ValueError("N must be positive")
    best = 0.0
    for Z in _chunks(f.n, N, seed):
        best = max(best, float(np.max(np.abs(eval_symbol(f, Z)))))
    return best


def exceptional_set_fraction(phi: PolySelfMap, eta: PolySelfMap, eps: float,
                             N: int = 100_000, seed: int = 0) -> float:
    """Fraction of sphere samples with |<phi(z), eta(z)>| >= 1 - eps."""
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if N < 1:
        raise ValueError("N must be positive")
    f = pairing_symbol(phi, eta)
    hits = 0
    for Z in _chunks(f.n, N, seed):
        hits += int(np.count_nonzero(np.abs(eval_symbol(f, Z)) >= 1 - eps))
    return hits / N


def _chunks(n, N, seed, size=200_000):
    Z = sphere_sample(n, N, seed)
    for start in range(0, N, size):
        yield Z[start:start + size]


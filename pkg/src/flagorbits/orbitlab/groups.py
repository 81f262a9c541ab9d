"""Concrete matrix models: GL_n (type A_{n-1}) and Sp_2n (type C_n) over F_p.

Matrices act on column vectors; a subspace stored as the row space of M is
sent by g to the row space of M g^T.  B is the upper triangular subgroup.

For Sp_2n the Gram matrix is J[i, N-1-i] = 1 for i < N-1-i and -1 otherwise
(0-based), i.e. omega(e_i, e_j) = delta_{i+j, N+1} for i < j in 1-based terms.
The torus used for orbit enumeration is that of GSp_2n: the split maximal torus
of Sp_2n together with the similitude diag(1,..,1,c,..,c).  Scalars act
trivially on subspaces, so over the algebraic closure the B-orbits are those of
Sp_2n; over F_p the extra similitude is needed to avoid spurious splitting, and
the remaining splitting is undone by quadratic torus twists (see `twists`).
"""

import itertools
from dataclasses import dataclass
from math import prod

import numpy as np

from ..roots import build_root_system
from .linalg import PrimeField, inverse


@dataclass(frozen=True)
class GroupSpec:
    """kind is 'gl' (GL_n, n = matrix size) or 'sp' (Sp_2n, n = half size); q lists the fields."""

    kind: str
    n: int
    q: tuple = (3,)

    def __post_init__(self):
        if self.kind not in ("gl", "sp"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.n < 2 if self.kind == "gl" else self.n < 1:
            raise ValueError("group too small")
        qs = (self.q,) if isinstance(self.q, int) else tuple(self.q)
        object.__setattr__(self, "q", qs)
        for q in qs:
            PrimeField(q)
            if self.kind == "sp" and q == 2:
                raise ValueError("symplectic runs use odd q only")

    @classmethod
    def for_type(cls, cartan, q):
        cartan = str(cartan).upper()
        fam, r = cartan[0], int(cartan[1:])
        if fam == "A":
            return cls("gl", r + 1, q)
        if fam == "C":
            return cls("sp", r, q)
        raise ValueError(f"no matrix model for type {cartan}; orbitlab supports A_n and C_n")

    @property
    def N(self):
        return self.n if self.kind == "gl" else 2 * self.n

    @property
    def cartan(self):
        return f"A{self.n - 1}" if self.kind == "gl" else f"C{self.n}"

    @property
    def form(self):
        if self.kind != "sp":
            return None
        N = self.N
        J = np.zeros((N, N), dtype=np.int64)
        for i in range(N):
            J[i, N - 1 - i] = 1 if i < N - 1 - i else -1
        return J

    def subspace_dim(self, node):
        """Dimension of the subspaces parametrised by G/P for the 0-based node."""
        return node + 1


def _gaussian(n, k, q):
    num = prod(q ** (n - i) - 1 for i in range(k))
    den = prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


def flag_count(spec, node, q):
    """|G/P(F_q)| from the closed formulas (Gaussian binomials, isotropic Grassmannians)."""
    k = spec.subspace_dim(node)
    if spec.kind == "gl":
        return _gaussian(spec.n, k, q)
    n = spec.n
    return _gaussian(n, k, q) * prod(q ** (n - i) + 1 for i in range(k))


class MatrixGroup:
    def __init__(self, spec, q):
        self.spec = spec
        self.F = PrimeField(q)
        self.p = q
        self.N = spec.N
        self.kind = spec.kind
        self.rs = build_root_system(spec.cartan)
        self.J = spec.form
        self._build_roots()
        self.torus = self._torus_generators()
        self.twist_vectors = self._twist_vectors()

    # -- weights of basis vectors ------------------------------------------

    def basis_eps(self, a):
        """epsilon-coordinates of the weight of e_a (0-based)."""
        if self.kind == "gl":
            return tuple(int(i == a) for i in range(self.N))
        n = self.spec.n
        if a < n:
            return tuple(int(i == a) for i in range(n))
        return tuple(-int(i == self.N - 1 - a) for i in range(n))

    def eps_to_fundamental(self, lam):
        n = len(lam)
        if self.kind == "gl":
            return tuple(lam[i] - lam[i + 1] for i in range(n - 1))
        return tuple(lam[i] - lam[i + 1] for i in range(n - 1)) + (lam[n - 1],)

    def eps_to_root(self, lam):
        """Simple-root coordinates of an epsilon-vector lying in the root lattice."""
        if self.kind == "gl":
            out, acc = [], 0
            for i in range(self.N - 1):
                acc += lam[i]
                out.append(acc)
            return tuple(out)
        # C_n: e_i = a_i + ... + a_{n-1} + a_n / 2
        n = self.spec.n
        out, acc = [], 0
        for i in range(n - 1):
            acc += lam[i]
            out.append(acc)
        last = acc + lam[n - 1]
        assert last % 2 == 0
        out.append(last // 2)
        return tuple(out)

    def weight_of_indices(self, idx):
        eps = [0] * len(self.basis_eps(0))
        for a in idx:
            for i, x in enumerate(self.basis_eps(a)):
                eps[i] += x
        return self.eps_to_fundamental(eps)

    def root_of_entry(self, a, b):
        """Root of the matrix entry E_ab (a != b): wt(e_a) - wt(e_b)."""
        ea, eb = self.basis_eps(a), self.basis_eps(b)
        return self.eps_to_root(tuple(x - y for x, y in zip(ea, eb)))

    # -- root subgroups ------------------------------------------------------

    def _build_roots(self):
        N, p = self.N, self.p
        self.root_vector = {}
        for a in range(N):
            for b in range(N):
                if a == b:
                    continue
                beta = self.root_of_entry(a, b)
                if beta in self.root_vector:
                    continue
                X = np.zeros((N, N), dtype=np.int64)
                X[a, b] = 1
                if self.kind == "sp":
                    J = self.J
                    if b != N - 1 - a:
                        for c in (1, -1):
                            Y = X.copy()
                            Y[N - 1 - b, N - 1 - a] = c
                            if not ((Y.T @ J + J @ Y) % p).any():
                                X = Y
                                break
                        else:
                            raise AssertionError("no symplectic root vector")
                    assert not ((X.T @ J + J @ X) % p).any()
                if beta not in self.rs.index:
                    raise AssertionError(f"matrix entry ({a},{b}) gives non-root {beta}")
                self.root_vector[beta] = X
        if len(self.root_vector) != len(self.rs.all_coords):
            raise AssertionError("root vectors do not match the root system")
        self.positive = [b for b in self.rs.positive_coords]

    def x(self, beta, t=1):
        X = self.root_vector[tuple(beta)]
        return (np.eye(self.N, dtype=np.int64) + t * X) % self.p

    def _torus_generators(self):
        N, p, g = self.N, self.p, self.F.generator
        gens = []
        if self.kind == "gl":
            for i in range(N):
                t = np.eye(N, dtype=np.int64)
                t[i, i] = g
                gens.append(t)
        else:
            n = self.spec.n
            for i in range(n):
                t = np.eye(N, dtype=np.int64)
                t[i, i] = g
                t[N - 1 - i, N - 1 - i] = self.F.inv[g]
                gens.append(t)
            t = np.eye(N, dtype=np.int64)
            t[n:, n:] *= g
            gens.append(t % p)
        return [x for x in gens if (x != np.eye(N, dtype=np.int64)).any()]

    def borel_generators(self):
        """x_alpha(1) for positive alpha (generating U(F_p)) followed by torus generators."""
        return [self.x(b) for b in self.positive] + list(self.torus)

    def all_root_elements(self):
        return [self.x(b) for b in self.rs.all_coords]

    def _twist_vectors(self):
        """Exponent vectors k of t = diag(sqrt(c)^k_j), c a non-square, lying in GSp.

        k_{N-1-j} = k_c - k_j keeps omega up to the scalar sqrt(c)^k_c.  These
        t are points of the torus over F_{p^2}; applied to a rational point they
        give a rational point of the same geometric B-orbit whenever the result
        is rational.
        """
        if self.kind != "sp" or self.F.nonsquare is None:
            return []
        n = self.spec.n
        out = []
        for bits in itertools.product((0, 1), repeat=n + 1):
            if not any(bits):
                continue
            kb, kc = list(bits[:n]), bits[n]
            out.append(np.array(kb + [kc - kb[n - 1 - i] for i in range(n)], dtype=np.int64))
        return out

    def simple_lift(self, i):
        """Signed permutation matrix in G normalising T and inducing s_i."""
        N = self.N
        P = np.eye(N, dtype=np.int64)
        if self.kind == "gl":
            P[[i, i + 1]] = P[[i + 1, i]]
            return P
        n = self.spec.n
        if i < n - 1:
            perm = list(range(N))
            perm[i], perm[i + 1] = i + 1, i
            a, b = N - 1 - i, N - 2 - i
            perm[a], perm[b] = b, a
            P = np.eye(N, dtype=np.int64)[:, perm]
        else:
            P[n - 1, n - 1] = P[n, n] = 0
            P[n, n - 1] = 1
            P[n - 1, n] = -1
        P %= self.p
        J = self.J
        assert not ((P.T @ J @ P - J) % self.p).any()
        return P

    def inverse(self, g):
        return inverse(g, self.F)

    def is_isotropic(self, V):
        if self.kind != "sp":
            return True
        return not ((V @ self.J @ V.T) % self.p).any()

    # -- Lie algebra of B ----------------------------------------------------

    def borel_lie_basis(self):
        """Basis of Lie(B): (matrices, number of nilpotent ones first, torus dimension)."""
        N = self.N
        nil = [self.root_vector[b] for b in self.positive]
        tor = []
        if self.kind == "gl":
            for i in range(N):
                h = np.zeros((N, N), dtype=np.int64)
                h[i, i] = 1
                tor.append(h)
        else:
            n = self.spec.n
            for i in range(n):
                h = np.zeros((N, N), dtype=np.int64)
                h[i, i] = 1
                h[N - 1 - i, N - 1 - i] = -1
                tor.append(h % self.p)
            z = np.zeros((N, N), dtype=np.int64)
            z[n:, n:] = np.eye(n, dtype=np.int64)
            tor.append(z)
        return nil + tor, len(nil), len(tor)

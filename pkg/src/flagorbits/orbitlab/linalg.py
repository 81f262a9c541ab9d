"""Linear algebra over a prime field F_p on int64 numpy arrays.

Subspaces are stored as k x N reduced row echelon matrices (pivot 1, zeros
above and below each pivot).  Batches are arrays of shape (m, k, N).
"""

import numpy as np


class PrimeField:
    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime; only prime fields are supported")
        self.p = p
        inv = np.zeros(p, dtype=np.int64)
        for x in range(1, p):
            inv[x] = pow(x, -1, p)
        self.inv = inv
        self.generator = next(g for g in range(1, p) if len({pow(g, e, p) for e in range(p - 1)}) == p - 1)
        self.nonsquare = next((x for x in range(2, p) if pow(x, (p - 1) // 2, p) == p - 1), None)

    def sqrt(self, a):
        """Square roots of a in F_p, sorted; empty when a is not a square."""
        a %= self.p
        return sorted(x for x in range(self.p) if x * x % self.p == a)

    def is_square(self, a):
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def __repr__(self):
        return f"F_{self.p}"


def rref_batch(M, F):
    """Row reduce every k x N matrix of the batch M."""
    p = F.p
    M = np.array(M, dtype=np.int64) % p
    if M.ndim == 2:
        return rref_batch(M[None], F)[0]
    m, k, N = M.shape
    r = np.zeros(m, dtype=np.int64)
    rows = np.arange(k)[None, :]
    for c in range(N):
        cand = (M[:, :, c] != 0) & (rows >= r[:, None])
        has = cand.any(1)
        if not has.any():
            continue
        sel = np.nonzero(has)[0]
        pr = np.argmax(cand[sel], 1)
        rr = r[sel]
        a = M[sel, pr].copy()
        b = M[sel, rr].copy()
        M[sel, pr] = b
        M[sel, rr] = a
        inv = F.inv[M[sel, rr, c]]
        M[sel, rr] = (M[sel, rr] * inv[:, None]) % p
        prow = M[sel, rr]
        f = M[sel, :, c].copy()
        f[np.arange(len(sel)), rr] = 0
        M[sel] = (M[sel] - f[:, :, None] * prow[:, None, :]) % p
        r[sel] += 1
    return M


def rank_batch(M, F):
    R = rref_batch(M, F)
    return (R != 0).any(axis=2).sum(axis=1)


def rank(A, F):
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return 0
    return int(rank_batch(A[None], F)[0])


def encode(M, F):
    """Integer codes ordering flattened matrices lexicographically (first entry most significant)."""
    M = np.asarray(M, dtype=np.int64)
    m = M.shape[0]
    flat = M.reshape(m, -1)
    width = flat.shape[1]
    if F.p ** width >= 2 ** 62:
        raise OverflowError(f"{width} entries over F_{F.p} do not fit a 64-bit code")
    w = F.p ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (flat * w).sum(1)


def inverse(g, F):
    """Inverse of a square matrix over F_p (Gauss-Jordan)."""
    p = F.p
    n = g.shape[0]
    a = np.concatenate([np.asarray(g, dtype=np.int64) % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r, c] % p)
        a[[c, piv]] = a[[piv, c]]
        a[c] = a[c] * F.inv[a[c, c]] % p
        for r in range(n):
            if r != c and a[r, c]:
                a[r] = (a[r] - a[r, c] * a[c]) % p
    return a[:, n:]


def residual(rows, V, F):
    """Rows reduced modulo the row space of the RREF matrix V (zero iff inside)."""
    rows = np.asarray(rows, dtype=np.int64) % F.p
    out = rows.copy()
    for vr in V:
        nz = np.nonzero(vr)[0]
        if len(nz) == 0:
            continue
        c = nz[0]
        out = (out - out[..., c:c + 1] * vr) % F.p
    return out


def meet_profile(V, F):
    """dim(V cap E_j) for j = 0..N, E_j spanned by the first j basis vectors."""
    V = np.asarray(V, dtype=np.int64)
    k, N = V.shape
    return [k - rank(V[:, j:], F) if j < N else k for j in range(N + 1)]


def jump_set(V, F):
    prof = meet_profile(V, F)
    return tuple(j for j in range(1, len(prof)) if prof[j] > prof[j - 1])


def span_rref(rows, F):
    """RREF basis (nonzero rows only) of the span of `rows`."""
    R = rref_batch(np.asarray(rows, dtype=np.int64)[None], F)[0]
    return R[(R != 0).any(axis=1)]

"""Independent brute-force oracles in plain Python, sharing no code with the package.

Subspaces are tuples of RREF rows over F_p.  Borel classes on X1 x X2 are
counted fibrewise: every B-orbit on X2 meets the coordinate subspaces exactly
once, and the stabiliser in B of a coordinate subspace is generated by the
torus and the root elements fixing it.
"""

import itertools
from fractions import Fraction


def rref(rows, p):
    m = [list(r) for r in rows]
    n = len(m[0]) if m else 0
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] % p:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return tuple(tuple(x % p for x in row) for row in m[:r])


def span_size(rows, p):
    """|row space| by listing every linear combination."""
    seen = set()
    for cs in itertools.product(range(p), repeat=len(rows)):
        seen.add(tuple(sum(c * r[j] for c, r in zip(cs, rows)) % p for j in range(len(rows[0]))))
    return len(seen)


def subspaces(N, k, p, form=None):
    """Every k-dimensional subspace of F_p^N (isotropic for `form` when given)."""
    out = []
    for piv in itertools.combinations(range(N), k):
        free = [(i, j) for i in range(k) for j in range(piv[i] + 1, N) if j not in piv]
        for vals in itertools.product(range(p), repeat=len(free)):
            M = [[0] * N for _ in range(k)]
            for i, c in enumerate(piv):
                M[i][c] = 1
            for (i, j), v in zip(free, vals):
                M[i][j] = v
            if form is None or all(bil(form, a, b, p) == 0 for a in M for b in M):
                out.append(tuple(tuple(r) for r in M))
    return out


def bil(J, a, b, p):
    return sum(a[i] * J[i][j] * b[j] for i in range(len(a)) for j in range(len(a))) % p


def apply(g, V, p):
    return rref([[sum(g[i][j] * v[j] for j in range(len(v))) % p for i in range(len(g))] for v in V], p)


def eye(N):
    return [[int(i == j) for j in range(N)] for i in range(N)]


def symplectic_form(n):
    N = 2 * n
    J = [[0] * N for _ in range(N)]
    for i in range(N):
        J[i][N - 1 - i] = 1 if i < n else -1
    return J


def preserves(g, J, p, scale=1):
    N = len(g)
    return all(
        sum(g[a][i] * J[a][b] * g[b][j] for a in range(N) for b in range(N)) % p == scale * J[i][j] % p
        for i in range(N) for j in range(N))


def generator(p):
    return next(g for g in range(1, p) if len({pow(g, e, p) for e in range(p - 1)}) == p - 1)


def borel(kind, n, p):
    """(unipotent generators, torus generators) of the upper-triangular Borel of GL_n or GSp_2n."""
    g = generator(p)
    if kind == "gl":
        unip = []
        for i, j in itertools.combinations(range(n), 2):
            x = eye(n)
            x[i][j] = 1
            unip.append(x)
        tor = []
        for i in range(n):
            t = eye(n)
            t[i][i] = g
            tor.append(t)
        return unip, tor
    N = 2 * n
    J = symplectic_form(n)
    unip = []
    for i, j in itertools.combinations(range(N), 2):
        bi, bj = N - 1 - j, N - 1 - i
        for s in range(p):
            x = eye(N)
            x[i][j] = 1
            if (bi, bj) != (i, j):
                x[bi][bj] = (x[bi][bj] + s) % p
            if preserves(x, J, p):
                unip.append(x)
                break
    tor = []
    for i in range(n):
        t = eye(N)
        t[i][i] = g
        t[N - 1 - i][N - 1 - i] = pow(g, -1, p)
        tor.append(t)
    t = eye(N)
    for i in range(n, N):
        t[i][i] = g
    tor.append(t)
    return unip, tor


def _components(points, gens, p):
    idx = {x: i for i, x in enumerate(points)}
    parent = list(range(len(points)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for i, x in enumerate(points):
            j = idx[apply(g, x, p)]
            a, b = find(i), find(j)
            if a != b:
                parent[a] = b
    sizes = {}
    for i in range(len(points)):
        r = find(i)
        sizes[r] = sizes.get(r, 0) + 1
    return sizes


def coordinate_subspace(S, N):
    return tuple(tuple(int(j == i) for j in range(N)) for i in sorted(S))


def borel_class_sizes(kind, n, k1, k2, p):
    """Sizes of the B(F_p)-orbits on X1 x X2, X_i the k_i-subspaces (isotropic for sp)."""
    N = n if kind == "gl" else 2 * n
    J = symplectic_form(n) if kind == "sp" else None
    X1 = subspaces(N, k1, p, J)
    unip, tor = borel(kind, n, p)
    fixed = [coordinate_subspace(S, N) for S in itertools.combinations(range(N), k2)]
    if J is not None:
        fixed = [y for y in fixed if all(bil(J, a, b, p) == 0 for a in y for b in y)]
    gens = unip + tor
    sizes = []
    for y in fixed:
        orbit, frontier = {y}, [y]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    z = apply(g, x, p)
                    if z not in orbit:
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        stab = [g for g in gens if apply(g, y, p) == y]
        for s in _components(X1, stab, p).values():
            sizes.append(s * len(orbit))
    return sizes


def gaussian(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def typeA_distance(n, k, l, I, J):
    """d(lam1, lam2) in A_n for lam1, lam2 the weights of the subsets I (size k), J (size l) of {0..n}.

    With varpi_k = e_1 + ... + e_k minus its mean, (lam_I, lam_J) = |I cap J| - kl/(n+1).
    """
    top = Fraction(min(k, l)) - Fraction(k * l, n + 1)
    return top - (len(set(I) & set(J)) - Fraction(k * l, n + 1))


def subset_weight(n, I):
    """Fundamental-weight coordinates of e_I (minus its mean) in A_n: the i-th is [i in I] - [i+1 in I]."""
    return tuple(int(i in I) - int(i + 1 in I) for i in range(n))

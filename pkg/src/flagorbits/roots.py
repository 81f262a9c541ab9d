"""Exact root systems of the finite crystallographic types.

Conventions, used everywhere in the package:

* Bourbaki numbering of simple roots.  E6 is the chain 1-3-4-5-6 with node 2
  attached to node 4; B_n has alpha_n short, C_n has alpha_n long, F4 has
  alpha_1, alpha_2 long, G2 has alpha_1 short.
* Short roots have squared length 2, so (alpha, alpha) is 2, 4 or 6.
* Roots are integer vectors in the basis of simple roots.  Weights are
  rational vectors in the basis of fundamental weights, so the i-th
  coordinate of a weight is its pairing with the simple coroot alpha_i^vee.
* cartan_matrix[i][j] = <alpha_i^vee, alpha_j>, hence a root with simple-root
  coordinates b has weight coordinates A b.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

FAMILIES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(f)
        if not ok:
            raise RootSystemError(f"inadmissible Cartan type {f}{n}")

    @classmethod
    def parse(cls, text):
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(text[0], int(text[1:]))

    @property
    def simply_laced(self):
        return self.family in "ADE"

    def __str__(self):
        return f"{self.family}{self.rank}"


def _gram_data(t):
    """Half squared lengths d_i and the off-diagonal Gram entries of the simple roots."""
    f, n = t.family, t.rank
    bonds = {}
    if f == "A":
        d = [1] * n
        bonds = {(i, i + 1): -1 for i in range(n - 1)}
    elif f == "B":
        d = [2] * (n - 1) + [1]
        bonds = {(i, i + 1): -2 for i in range(n - 1)}
    elif f == "C":
        d = [1] * (n - 1) + [2]
        bonds = {(i, i + 1): -1 for i in range(n - 2)}
        bonds[(n - 2, n - 1)] = -2
    elif f == "D":
        d = [1] * n
        bonds = {(i, i + 1): -1 for i in range(n - 2)}
        bonds[(n - 3, n - 1)] = -1
    elif f == "E":
        d = [1] * n
        bonds = {(0, 2): -1, (1, 3): -1}
        bonds.update({(i, i + 1): -1 for i in range(2, n - 1)})
    elif f == "F":
        d = [2, 2, 1, 1]
        bonds = {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    else:
        d = [1, 3]
        bonds = {(0, 1): -3}
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2 * d[i]
    for (i, j), v in bonds.items():
        gram[i][j] = gram[j][i] = v
    return d, gram


def _inverse(mat):
    """Exact inverse of a square integer matrix (Gauss-Jordan over Fractions)."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class Root:
    coords: tuple
    system: "RootSystem" = field(repr=False, compare=True)

    def __neg__(self):
        return Root(tuple(-c for c in self.coords), self.system)

    @property
    def height(self):
        return sum(self.coords)

    @property
    def positive(self):
        return any(c > 0 for c in self.coords)

    def __str__(self):
        return format_root(self.coords)


@dataclass(frozen=True)
class Weight:
    coords: tuple
    system: "RootSystem" = field(repr=False, compare=True)

    def __neg__(self):
        return Weight(tuple(-c for c in self.coords), self.system)

    def __add__(self, other):
        _same(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.system)

    def __sub__(self, other):
        return self + (-other)

    @property
    def dominant(self):
        return all(c >= 0 for c in self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def format_root(coords):
    terms = []
    for i, c in enumerate(coords, 1):
        if c:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}a{i}")
    s = "".join(terms) or "0"
    return s[1:] if s.startswith("+") else s


def _same(x, y):
    if x.system is not y.system:
        raise RootSystemError("operands come from different root systems")


class RootSystem:
    """Root datum built from a Cartan matrix and its symmetrizer.

    Levi subsystems are built with from_cartan and may be reducible or empty;
    they carry `embedding`, the list of ambient node indices of their nodes.
    """

    def __init__(self, cartan_matrix, symmetrizer, cartan_type=None, name=None, embedding=None):
        n = len(cartan_matrix)
        self.rank = n
        self.cartan_matrix = tuple(tuple(int(x) for x in row) for row in cartan_matrix)
        self.symmetrizer = tuple(int(x) for x in symmetrizer)
        self.cartan_type = cartan_type
        self.name = name or (str(cartan_type) if cartan_type else f"rank{n}")
        self.embedding = tuple(embedding) if embedding is not None else tuple(range(n))
        a, d = self.cartan_matrix, self.symmetrizer
        gram = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if gram[i][j] != gram[j][i]:
                    raise RootSystemError("symmetrizer does not symmetrize the Cartan matrix")
        self.root_gram = tuple(tuple(r) for r in gram)
        inv = _inverse(a) if n else []
        self._cartan_inverse = inv
        # (w_i, w_j) = (A^{-T} D)_{ij}
        self.weight_gram = tuple(
            tuple(inv[j][i] * d[j] for j in range(n)) for i in range(n))
        self._build_roots()

    @classmethod
    def from_cartan(cls, cartan_matrix, symmetrizer, name=None, embedding=None):
        return cls(cartan_matrix, symmetrizer, None, name, embedding)

    def __repr__(self):
        return f"RootSystem({self.name})"

    # -- enumeration -------------------------------------------------------

    def _build_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for b in frontier:
                for i in range(n):
                    c = self.coroot_pairing_root(b, i)
                    if c == 0:
                        continue
                    r = tuple(x - c * int(i == j) for j, x in enumerate(b))
                    if all(x >= 0 for x in r) and r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        pos = sorted(seen, key=lambda r: (sum(r), r))
        self.positive_coords = tuple(pos)
        self.all_coords = tuple(pos) + tuple(tuple(-x for x in r) for r in pos)
        self.index = {r: k for k, r in enumerate(self.all_coords)}
        for r in pos:
            if self.norm2(r) not in (2, 4, 6):
                raise RootSystemError(f"root {r} has unexpected length")

    @property
    def positive_roots(self):
        return [Root(r, self) for r in self.positive_coords]

    @property
    def simple_roots(self):
        return [self.simple_root(i) for i in range(self.rank)]

    def simple_root(self, i):
        return Root(tuple(int(i == j) for j in range(self.rank)), self)

    def fundamental_weight(self, i):
        return Weight(tuple(Fraction(int(i == j)) for j in range(self.rank)), self)

    def root(self, coords):
        coords = tuple(int(c) for c in coords)
        if coords not in self.index:
            raise RootSystemError(f"{coords} is not a root of {self.name}")
        return Root(coords, self)

    def weight(self, coords):
        return Weight(tuple(Fraction(c) for c in coords), self)

    @property
    def simply_laced(self):
        return all(d == self.symmetrizer[0] for d in self.symmetrizer)

    # -- raw arithmetic on coordinate tuples --------------------------------

    def coroot_pairing_root(self, b, i):
        """<beta, alpha_i^vee> for a root given in simple-root coordinates."""
        return sum(self.cartan_matrix[i][j] * x for j, x in enumerate(b))

    def norm2(self, b):
        g = self.root_gram
        return sum(b[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def root_to_weight(self, b):
        a = self.cartan_matrix
        return tuple(sum(a[i][j] * b[j] for j in range(self.rank)) for i in range(self.rank))

    def weight_to_root(self, lam):
        inv = self._cartan_inverse
        return tuple(sum(inv[i][j] * lam[j] for j in range(self.rank)) for i in range(self.rank))

    def pair(self, lam, b):
        """(lambda, beta): weight coordinates against simple-root coordinates."""
        d = self.symmetrizer
        return sum(l * x * dd for l, x, dd in zip(lam, b, d))

    def positive_pairings(self, lam):
        """((lam, beta) for beta in positive_coords), cached per weight."""
        lam = tuple(lam)
        cache = self.__dict__.setdefault("_pairings", {})
        v = cache.get(lam)
        if v is None:
            v = cache[lam] = tuple(self.pair(lam, b) for b in self.positive_coords)
        return v

    def root_inner(self, b, c):
        g = self.root_gram
        return sum(b[i] * g[i][j] * c[j] for i in range(self.rank) for j in range(self.rank) if b[i] and c[j])

    def weight_inner(self, lam, mu):
        g = self.weight_gram
        return sum(lam[i] * g[i][j] * mu[j] for i in range(self.rank) for j in range(self.rank) if lam[i] and mu[j])

    def coroot_pairing_weight(self, lam, b):
        """<lambda, beta^vee> = 2 (lambda, beta) / (beta, beta)."""
        return Fraction(2 * self.pair(lam, b), self.norm2(b))

    def reflect_weight(self, b, lam):
        c = self.coroot_pairing_weight(lam, b)
        if c == 0:
            return tuple(lam)
        bw = self.root_to_weight(b)
        return tuple(l - c * x for l, x in zip(lam, bw))

    def reflect_root(self, b, c):
        k = Fraction(2 * self.root_inner(b, c), self.norm2(b))
        assert k.denominator == 1
        k = int(k)
        return tuple(y - k * x for x, y in zip(b, c))

    def simple_reflect_weight(self, i, lam):
        """s_i(lambda) = lambda - lambda_i alpha_i, alpha_i read in weight coordinates."""
        lam = tuple(lam)
        cache = self.__dict__.setdefault("_simple_reflections", {})
        out = cache.get((i, lam))
        if out is None:
            li = lam[i]
            a = self.cartan_matrix
            out = lam if li == 0 else tuple(l - li * a[j][i] for j, l in enumerate(lam))
            if len(cache) < 1 << 20:
                cache[(i, lam)] = out
        return out

    def simple_reflect_root(self, i, b):
        c = self.coroot_pairing_root(b, i)
        if c == 0:
            return tuple(b)
        return tuple(x - c * int(i == j) for j, x in enumerate(b))

    # -- subsystems ----------------------------------------------------------

    def components(self, nodes=None):
        """Connected components of the Dynkin diagram restricted to `nodes`."""
        nodes = sorted(range(self.rank) if nodes is None else nodes)
        left = set(nodes)
        comps = []
        while left:
            start = min(left)
            comp, stack = {start}, [start]
            while stack:
                i = stack.pop()
                for j in list(left):
                    if j not in comp and self.cartan_matrix[i][j] != 0:
                        comp.add(j)
                        stack.append(j)
            left -= comp
            comps.append(tuple(sorted(comp)))
        return comps

    def levi(self, nodes):
        """Root system spanned by the simple roots in `nodes` (ambient numbering)."""
        nodes = tuple(sorted(nodes))
        a = [[self.cartan_matrix[i][j] for j in nodes] for i in nodes]
        d = [self.symmetrizer[i] for i in nodes]
        label = f"{self.name}[" + ",".join(str(i + 1) for i in nodes) + "]"
        return RootSystem.from_cartan(a, d, name=label,
                                      embedding=[self.embedding[i] for i in nodes])

    def lift(self, coords, sub):
        """Ambient coordinates of a root of the subsystem `sub` built by levi()."""
        out = [0] * self.rank
        pos = {e: k for k, e in enumerate(self.embedding)}
        for k, c in enumerate(coords):
            out[pos[sub.embedding[k]]] = c
        return tuple(out)


@lru_cache(maxsize=None)
def build_root_system(t):
    if isinstance(t, str):
        t = CartanType.parse(t)
    d, gram = _gram_data(t)
    n = t.rank
    cartan = [[gram[i][j] // d[i] for j in range(n)] for i in range(n)]
    return RootSystem(cartan, d, cartan_type=t)


def inner(x, y):
    """W-invariant form on roots and weights of one system."""
    _same(x, y)
    R = x.system
    if isinstance(x, Root) and isinstance(y, Root):
        return Fraction(R.root_inner(x.coords, y.coords))
    if isinstance(x, Weight) and isinstance(y, Weight):
        return Fraction(R.weight_inner(x.coords, y.coords))
    if isinstance(x, Root):
        x, y = y, x
    return Fraction(R.pair(x.coords, y.coords))


def reflect(gamma, x):
    _same(gamma, x)
    R = gamma.system
    if isinstance(x, Weight):
        return Weight(R.reflect_weight(gamma.coords, x.coords), R)
    return Root(R.reflect_root(gamma.coords, x.coords), R)


def coroot_pairing(x, gamma):
    """<x, gamma^vee> for a weight or root x."""
    _same(x, gamma)
    return Fraction(2) * inner(x, gamma) / inner(gamma, gamma)


def highest_root(R):
    if R.rank == 0 or len(R.components()) != 1:
        raise RootSystemError(f"{R.name} is not irreducible")
    return Root(_highest(R.positive_coords), R)


def _highest(coords_list):
    top = max(coords_list, key=lambda r: (sum(r), r))
    for r in coords_list:
        if any(a < b for a, b in zip(top, r)):
            raise RootSystemError("no root dominates all others")
    return top


def orthogonal_subsystem(R, S):
    S = list(S)
    return {Root(r, R) for r in R.all_coords
            if all(R.root_inner(r, s.coords) == 0 for s in S)}

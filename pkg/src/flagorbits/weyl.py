"""Weyl group elements as permutations of the roots, and minimal coset representatives.

A WeylElement stores the permutation it induces on `system.all_coords`
(positive roots first, then their negatives in the same order) together with
its lexicographically least reduced word, built greedily from the smallest
left descent.  Words use 0-based node indices internally.

Coset representatives for a maximal parabolic P are read off the weight orbit
W.varpi_P: the element u in W^P is the unique minimal one with u(varpi_P) = mu.
"""

import os
import struct
import tempfile
import threading
from fractions import Fraction
from pathlib import Path

import numpy as np

from .roots import RootSystemError, Weight

_TABLES = {}
_LOCK = threading.Lock()


def _tables(R):
    """Per-system permutation tables for the simple reflections (lazily built)."""
    t = R.__dict__.get("_weyl_tables")
    if t is None:
        n2 = len(R.all_coords)
        refl = []
        for i in range(R.rank):
            refl.append(tuple(R.index[R.simple_reflect_root(i, b)] for b in R.all_coords))
        simple_index = [R.index[tuple(int(i == j) for j in range(R.rank))] for i in range(R.rank)]
        t = {"refl": refl, "simple": simple_index, "npos": len(R.positive_coords), "n": n2}
        R._weyl_tables = t
    return t


class WeylElement:
    __slots__ = ("system", "perm", "_word")

    def __init__(self, system, perm, word=None):
        self.system = system
        self.perm = tuple(perm)
        self._word = word

    @classmethod
    def identity(cls, R):
        return cls(R, range(len(R.all_coords)), ())

    @classmethod
    def from_word(cls, R, word):
        t = _tables(R)
        perm = list(range(len(R.all_coords)))
        for i in reversed(word):
            s = t["refl"][i]
            perm = [s[k] for k in perm]
        return cls(R, perm)

    @classmethod
    def simple(cls, R, i):
        return cls(R, _tables(R)["refl"][i], (i,))

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.system is other.system and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __mul__(self, other):
        if self.system is not other.system:
            raise RootSystemError("elements of different Weyl groups")
        p = self.perm
        return WeylElement(self.system, [p[k] for k in other.perm])

    def inverse(self):
        inv = [0] * len(self.perm)
        for k, x in enumerate(self.perm):
            inv[x] = k
        return WeylElement(self.system, inv)

    @property
    def length(self):
        npos = _tables(self.system)["npos"]
        return sum(1 for x in self.perm[:npos] if x >= npos)

    def inversions(self):
        """Positive roots beta with w(beta) negative, as coordinate tuples."""
        R = self.system
        npos = _tables(R)["npos"]
        return [R.all_coords[k] for k, x in enumerate(self.perm[:npos]) if x >= npos]

    def left_descents(self):
        t = _tables(self.system)
        npos = t["npos"]
        inv_simple = []
        for i, si in enumerate(t["simple"]):
            # w^{-1}(alpha_i) < 0  iff  alpha_i = w(beta) with beta negative
            k = self.perm.index(si)
            if k >= npos:
                inv_simple.append(i)
        return inv_simple

    def right_descents(self):
        t = _tables(self.system)
        return [i for i, si in enumerate(t["simple"]) if self.perm[si] >= t["npos"]]

    @property
    def word(self):
        if self._word is None:
            word = []
            w = self
            t = _tables(self.system)
            while True:
                d = w.left_descents()
                if not d:
                    break
                i = d[0]
                word.append(i)
                s = t["refl"][i]
                w = WeylElement(self.system, [s[k] for k in w.perm])
            self._word = tuple(word)
        return self._word

    def word_str(self):
        return "".join(str(i + 1) for i in self.word) or "e"

    def act_root(self, b):
        R = self.system
        return R.all_coords[self.perm[R.index[tuple(b)]]]

    def __repr__(self):
        return f"WeylElement({self.system.name}, {self.word_str()})"


def act(w, x):
    """w(x) for a Weight or a Root."""
    if x.system is not w.system:
        raise RootSystemError("element and weight from different systems")
    R = w.system
    if isinstance(x, Weight):
        lam = x.coords
        for i in reversed(w.word):
            lam = R.simple_reflect_weight(i, lam)
        return Weight(tuple(Fraction(c) for c in lam), R)
    return type(x)(w.act_root(x.coords), R)


def act_coords(w, lam):
    R = w.system
    for i in reversed(w.word):
        lam = R.simple_reflect_weight(i, lam)
    return tuple(lam)


def longest_element(R):
    """w0, obtained by right multiplying by simple reflections until no ascent is left."""
    t = _tables(R)
    npos = t["npos"]
    perm = list(range(len(R.all_coords)))
    word = []
    while True:
        asc = [i for i, si in enumerate(t["simple"]) if perm[si] < npos]
        if not asc:
            break
        i = asc[0]
        s = t["refl"][i]
        perm = [perm[s[k]] for k in range(len(perm))]
        word.append(i)
    w = WeylElement(R, perm)
    assert w.length == npos
    return w


# -- coset representatives -------------------------------------------------


class CosetRep:
    """Minimal-length representative of a coset in W/W_P."""

    __slots__ = ("element", "parabolic")

    def __init__(self, element, parabolic, check=True):
        if check:
            R = parabolic.system
            for j in parabolic.levi_nodes:
                img = element.act_root(tuple(int(i == j) for i in range(R.rank)))
                if not any(c > 0 for c in img):
                    raise ValueError(f"{element} is not minimal in its coset mod W_P")
        self.element = element
        self.parabolic = parabolic

    def __eq__(self, other):
        return isinstance(other, CosetRep) and self.element == other.element and \
            self.parabolic.node == other.parabolic.node

    def __hash__(self):
        return hash((self.element, self.parabolic.node))

    @property
    def length(self):
        return self.element.length

    @property
    def word(self):
        return self.element.word

    def weight(self):
        return act(self.element, self.parabolic.weight)

    def __repr__(self):
        return f"CosetRep({self.element.word_str()} mod P{self.parabolic.node + 1})"


def coset_word_of_weight(R, mu):
    """Lex-least reduced word of the minimal u with u(varpi) = mu."""
    word = []
    mu = tuple(mu)
    while True:
        i = next((k for k, c in enumerate(mu) if c < 0), None)
        if i is None:
            return tuple(word)
        word.append(i)
        mu = R.simple_reflect_weight(i, mu)


def coset_rep_of_weight(mu, P):
    R = P.system
    coords = mu.coords if isinstance(mu, Weight) else tuple(mu)
    word = coset_word_of_weight(R, coords)
    w = WeylElement.from_word(R, word)
    w._word = word
    rep = CosetRep(w, P)
    if act_coords(w, P.weight.coords) != tuple(coords):
        raise ValueError(f"{coords} is not in the orbit of varpi_{P.node + 1}")
    return rep


def coset_rep(w, P):
    """Minimal representative of w W_P."""
    return coset_rep_of_weight(act(w, P.weight), P)


def weight_orbit(R, lam):
    lam = tuple(Fraction(c) for c in lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(R.rank):
                if mu[i] > 0:
                    nu = R.simple_reflect_weight(i, mu)
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
        frontier = nxt
    return sorted(seen)


def min_coset_reps(P):
    R = P.system
    reps = [coset_rep_of_weight(mu, P) for mu in weight_orbit(R, P.weight.coords)]
    reps.sort(key=lambda u: (u.length, u.word))
    return reps


def longest_coset_rep(P):
    w0 = longest_element(P.system)
    return coset_rep(w0, P).element


def dual_rep(u, P2):
    """u^vee = u w_{P2}, for an opposite cominuscule pair (u.parabolic, P2)."""
    P1 = u.parabolic
    R = P1.system
    w0 = longest_element(R)
    if act(w0, P1.weight) != -P2.weight:
        raise ValueError("dual_rep needs an opposite pair of parabolics")
    wp2 = longest_coset_rep(P2)
    uv = u.element * wp2
    rep = CosetRep(uv, P2)
    if u.length + rep.length != wp2.length:
        raise AssertionError("lengths do not add up for the dual representative")
    return rep


# -- full group enumeration with an on-disk table ---------------------------

CACHE_MAGIC = b"FLAGORBITS-WEYL\n"
CACHE_VERSION = 1


def cache_dir():
    d = os.environ.get("FLAGORBITS_CACHE")
    if d:
        return Path(d)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "flagorbits"


class WeylGroupTable:
    """All elements of W, ordered by (length, lex-least reduced word)."""

    def __init__(self, R, perms, words):
        self.system = R
        self.perms = perms
        self.words = words
        self._index = {p.tobytes(): k for k, p in enumerate(perms)}

    def __len__(self):
        return len(self.words)

    def element(self, k):
        return WeylElement(self.system, self.perms[k].tolist(), self.words[k])

    def __iter__(self):
        return (self.element(k) for k in range(len(self)))

    def index_of(self, w):
        return self._index[np.asarray(w.perm, dtype=self.perms.dtype).tobytes()]

    def inversion_bits(self, k):
        npos = _tables(self.system)["npos"]
        return self.perms[k][:npos] >= npos


def _enumerate_group(R):
    t = _tables(R)
    npos, n2 = t["npos"], t["n"]
    refl = [np.array(s, dtype=np.int16) for s in t["refl"]]
    simple = t["simple"]
    layer = np.arange(n2, dtype=np.int16)[None, :]
    layers = [layer]
    while True:
        cand = np.concatenate([s[layer] for s in refl])
        lens = (cand[:, :npos] >= npos).sum(1)
        cand = cand[lens == len(layers)]
        if len(cand) == 0:
            break
        layer = np.unique(cand, axis=0)
        layers.append(layer)
    perms = np.concatenate(layers)
    # lex-least words: w = s_i (s_i w) with i the smallest left descent
    index = {p.tobytes(): k for k, p in enumerate(perms)}
    words = [()] * len(perms)
    inv = np.argsort(perms, axis=1)
    for k in range(1, len(perms)):
        p = perms[k]
        i = next(i for i in range(R.rank) if inv[k][simple[i]] >= npos)
        parent = refl[i][p]
        words[k] = (i,) + words[index[parent.tobytes()]]
    order = sorted(range(len(perms)), key=lambda k: (len(words[k]), words[k]))
    return perms[order], [words[k] for k in order]


def _write_cache(path, R, perms, words):
    npos = _tables(R)["npos"]
    name = R.name.encode()
    nbytes = (npos + 7) // 8
    out = bytearray(CACHE_MAGIC)
    out += struct.pack("<HH", CACHE_VERSION, len(name)) + name
    out += struct.pack("<IH", len(words), npos)
    for p, w in zip(perms, words):
        out += struct.pack("<B", len(w)) + bytes(w)
        out += np.packbits(p[:npos] >= npos, bitorder="little")[:nbytes].tobytes()
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent)
    with os.fdopen(fd, "wb") as fh:
        fh.write(bytes(out))
    os.replace(tmp, path)


def _read_cache(path, R):
    data = path.read_bytes()
    if not data.startswith(CACHE_MAGIC):
        raise ValueError("bad magic")
    off = len(CACHE_MAGIC)
    version, nlen = struct.unpack_from("<HH", data, off)
    off += 4
    name = data[off:off + nlen].decode()
    off += nlen
    if version != CACHE_VERSION or name != R.name:
        raise ValueError("stale cache")
    count, npos = struct.unpack_from("<IH", data, off)
    off += 6
    nbytes = (npos + 7) // 8
    t = _tables(R)
    refl = [np.array(s, dtype=np.int16) for s in t["refl"]]
    perms = np.empty((count, t["n"]), dtype=np.int16)
    words = []
    index = {}
    for k in range(count):
        (wl,) = struct.unpack_from("<B", data, off)
        off += 1
        w = tuple(data[off:off + wl])
        off += wl
        bits = np.unpackbits(np.frombuffer(data[off:off + nbytes], dtype=np.uint8),
                             bitorder="little")[:npos].astype(bool)
        off += nbytes
        if wl == 0:
            p = np.arange(t["n"], dtype=np.int16)
        else:
            p = refl[w[0]][perms[index[w[1:]]]]
        if not np.array_equal(p[:npos] >= npos, bits):
            raise ValueError("inversion set mismatch in cache")
        perms[k] = p
        index[w] = k
        words.append(w)
    return perms, words


def weyl_group(R, use_cache=True):
    """Enumerate W(R), reading or writing the on-disk table when R has a Cartan type."""
    key = R.name
    with _LOCK:
        tab = _TABLES.get(key) if R.cartan_type is not None else None
        if tab is not None and tab.system is R:
            return tab
        perms = words = None
        path = cache_dir() / f"weyl-{R.name}-v{CACHE_VERSION}.bin"
        if use_cache and R.cartan_type is not None and path.exists():
            try:
                perms, words = _read_cache(path, R)
            except (ValueError, KeyError, struct.error):
                perms = None
        if perms is None:
            perms, words = _enumerate_group(R)
            if use_cache and R.cartan_type is not None:
                try:
                    _write_cache(path, R, perms, words)
                except OSError:
                    pass
        tab = WeylGroupTable(R, perms, words)
        if R.cartan_type is not None:
            _TABLES[key] = tab
        return tab

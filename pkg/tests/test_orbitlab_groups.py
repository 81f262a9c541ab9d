import itertools

import numpy as np
import pytest

from flagorbits.orbitlab import GroupSpec, MatrixGroup, flag_count
from flagorbits.weyl import WeylElement
from oracles import gaussian, subspaces, symplectic_form


def test_spec_validation():
    assert GroupSpec("gl", 3, 5).q == (5,)
    assert GroupSpec.for_type("A3", (2, 3)) == GroupSpec("gl", 4, (2, 3))
    assert GroupSpec.for_type("c3", 3).cartan == "C3"
    for bad in [("gl", 3, 4), ("sp", 3, 2), ("so", 3, 3), ("gl", 1, 3)]:
        with pytest.raises(ValueError):
            GroupSpec(*bad)
    with pytest.raises(ValueError, match="no matrix model"):
        GroupSpec.for_type("E6", 3)


@pytest.mark.parametrize("kind,n,node,q", [("gl", 4, 1, 2), ("gl", 4, 0, 3), ("gl", 5, 2, 2), ("sp", 2, 1, 3),
                                           ("sp", 3, 2, 3), ("sp", 3, 0, 3), ("sp", 2, 0, 5)])
def test_flag_count_against_enumeration(kind, n, node, q):
    spec = GroupSpec(kind, n, q)
    N = spec.N
    form = symplectic_form(n) if kind == "sp" else None
    assert flag_count(spec, node, q) == len(subspaces(N, node + 1, q, form))
    if kind == "gl":
        assert flag_count(spec, node, q) == gaussian(n, node + 1, q)


@pytest.mark.parametrize("kind,n,q", [("gl", 4, 3), ("sp", 3, 5), ("sp", 2, 7)])
def test_root_elements_and_borel(kind, n, q):
    G = MatrixGroup(GroupSpec(kind, n, q), q)
    J = G.J
    for g in G.all_root_elements() + G.torus:
        if J is not None:
            scale = {int(x) for x in ((g.T @ J @ g) % q)[J != 0] * J[J != 0] % q}
            assert len(scale) == 1
    for g in G.borel_generators():
        assert not np.tril(g, -1).any()
    assert len(G.positive) == len(G.rs.positive_coords)
    # [h, x_beta] = beta(h) x_beta for the torus of Lie(B)
    basis, n_nil, n_tor = G.borel_lie_basis()
    assert n_nil == len(G.positive) and len(basis) == n_nil + n_tor
    for h in basis[n_nil:]:
        for X in basis[:n_nil]:
            br = (h @ X - X @ h) % q
            nz = np.argwhere(X)[0]
            c = int(br[nz[0], nz[1]]) * pow(int(X[nz[0], nz[1]]), -1, q) % q
            assert np.array_equal(br, c * X % q)


@pytest.mark.parametrize("kind,n,q", [("gl", 4, 3), ("sp", 3, 5)])
def test_simple_lifts_induce_simple_reflections(kind, n, q):
    G = MatrixGroup(GroupSpec(kind, n, q), q)
    R = G.rs
    for i in range(R.rank):
        s = G.simple_lift(i)
        si = G.inverse(s)
        w = WeylElement.simple(R, i)
        for beta in G.positive:
            conj = s @ G.root_vector[tuple(beta)] @ si % q
            img = w.act_root(tuple(beta))
            target = G.root_vector[img] if img in G.root_vector else None
            assert target is not None
            # conjugate of a root vector is a nonzero multiple of the image root vector
            nz = np.argwhere(target)
            a, b = nz[0]
            c = int(conj[a, b])
            assert c and np.array_equal(conj, c * target % q)


def test_weights_of_coordinate_subspaces():
    G = MatrixGroup(GroupSpec("gl", 4, 3), 3)
    # e_1 + e_2 is the highest weight varpi_2
    assert tuple(G.weight_of_indices((0, 1))) == (0, 1, 0)
    assert tuple(G.weight_of_indices((2, 3))) == (0, -1, 0)
    S = MatrixGroup(GroupSpec("sp", 3, 3), 3)
    assert tuple(S.weight_of_indices((0, 1, 2))) == (0, 0, 1)
    for idx in itertools.combinations(range(6), 3):
        V = np.eye(6, dtype=np.int64)[list(idx)]
        assert S.is_isotropic(V) == all(a + b != 5 for a in idx for b in idx)

"""Lattice-group closure, structure computations, and recognition."""

from __future__ import annotations

import pytest
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import (
    AlternatingGroup,
    DihedralGroup,
    SymmetricGroup,
)

from qmi import NotFiniteOrder, OrderCapExceeded, UnknownFingerprint
from qmi.matgroup import (
    close_group,
    element_order,
    identify_iso_type,
    identity,
    mat,
    mat_inv,
    mat_mul,
    q_reducible,
    verify_conjugation,
    _MODEL_GENERATORS,
    _model_fingerprints,
)

ROT4 = mat([[0, -1], [1, 0]])
FLIP = mat([[1, 0], [0, -1]])
SHEAR = mat([[1, 1], [0, 1]])


def perm_group_profile(g: PermutationGroup):
    """(order, element-order multiset, abelian, |center|, |derived|)."""
    orders: dict[int, int] = {}
    for p in g.elements:
        k = p.order()
        orders[k] = orders.get(k, 0) + 1
    return (
        g.order(),
        tuple(sorted(orders.items())),
        g.is_abelian,
        g.center().order(),
        g.derived_subgroup().order(),
    )


class TestClosure:
    def test_cyclic_four(self):
        g = close_group([ROT4], ["r"])
        assert g.order == 4
        assert sorted(g.word_for(m) for m in g.elements) == ["1", "r", "r^2", "r^3"]

    def test_shortest_words(self):
        g = close_group([ROT4, FLIP], ["r", "s"])
        assert g.order == 8
        lengths = sorted(len(g.words[m]) for m in g.elements)
        assert lengths == [0, 1, 1, 2, 2, 2, 3, 3]

    def test_infinite_generator_rejected(self):
        with pytest.raises(NotFiniteOrder):
            close_group([SHEAR])

    def test_cap(self):
        with pytest.raises(OrderCapExceeded):
            close_group([ROT4], cap=3)

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            close_group([mat([[2, 0], [0, 1]])])

    def test_element_order_guard(self):
        assert element_order(ROT4) == 4
        with pytest.raises(NotFiniteOrder):
            element_order(SHEAR, guard=20)


class TestRecognition:
    def test_all_models_distinct_and_self_identifying(self):
        table = _model_fingerprints()
        assert len(table) == len(_MODEL_GENERATORS) == 18
        for label, gens in _MODEL_GENERATORS.items():
            assert identify_iso_type(close_group(gens, cap=200)) == label

    @pytest.mark.parametrize(
        "label,oracle",
        [
            ("S4", SymmetricGroup(4)),
            ("A4", AlternatingGroup(4)),
            ("S3", SymmetricGroup(3)),
            ("D4", DihedralGroup(4)),
            ("D6", DihedralGroup(6)),
            ("C6", PermutationGroup([Permutation([1, 2, 3, 4, 5, 0])])),
        ],
    )
    def test_model_profile_matches_sympy(self, label, oracle):
        g = close_group(_MODEL_GENERATORS[label], cap=200)
        assert g.fingerprint() == perm_group_profile(oracle)

    def test_unknown_fingerprint(self):
        # C5 does not embed in any built-in model.
        c5 = PermutationGroup([Permutation([1, 2, 3, 4, 0])])
        rows = [[1 if c5[0](i) == j else 0 for i in range(5)] for j in range(5)]
        g = close_group([mat(rows)], cap=200)
        with pytest.raises(UnknownFingerprint):
            identify_iso_type(g)


class TestStructure:
    def test_normal_subgroup_sizes_of_s4(self):
        g = close_group(_MODEL_GENERATORS["S4"], cap=200)
        sizes = [len(s) for s in g.normal_subgroups()]
        assert sizes == [1, 4, 12, 24]

    def test_normal_subgroups_of_v4_all_subgroups(self):
        g = close_group(_MODEL_GENERATORS["C2xC2"], cap=200)
        sizes = [len(s) for s in g.normal_subgroups()]
        assert sizes == [1, 2, 2, 2, 4]

    def test_normal_subgroups_of_d4(self):
        # center, the cyclic C4 and both Klein subgroups, plus the trivial pair
        g = close_group(_MODEL_GENERATORS["D4"], cap=200)
        sizes = sorted(len(s) for s in g.normal_subgroups())
        assert sizes == [1, 2, 4, 4, 4, 8]

    def test_conjugacy_class_count_matches_sympy_s4(self):
        g = close_group(_MODEL_GENERATORS["S4"], cap=200)
        assert len(g.conjugacy_classes()) == len(SymmetricGroup(4).conjugacy_classes())


class TestConjugation:
    def test_identity_conjugation(self):
        g = close_group([ROT4, FLIP])
        assert verify_conjugation(g, g, identity(2))

    def test_unimodular_conjugation(self):
        g = close_group([ROT4, FLIP])
        p = mat([[1, 1], [0, 1]])
        pinv = mat_inv(p)
        gens = [mat_mul(mat_mul(pinv, m), p) for m in (ROT4, FLIP)]
        h = close_group(gens)
        assert verify_conjugation(g, h, p)
        assert verify_conjugation(h, g, pinv)

    def test_wrong_target_fails(self):
        g = close_group([ROT4, FLIP])
        h = close_group([ROT4])
        assert not verify_conjugation(g, h, identity(2))

    def test_nonintegral_conjugate_is_false_not_error(self):
        g = close_group([mat([[0, 1], [1, 0]])])
        p = mat([[1, 1], [1, -1]])  # inverse has halves; conjugates stay integral
        q = mat([[2, 0], [0, 1]])  # conjugate of the swap is non-integral
        assert not verify_conjugation(g, g, q)
        assert verify_conjugation(g, close_group([mat([[1, 0], [0, -1]])]), p)


class TestReducibility:
    def test_diagonal_group_has_invariant_line(self):
        red, wit = q_reducible([FLIP])
        assert red and wit["dim"] == 1

    def test_c3_rotation_plane_is_irreducible(self):
        red, wit = q_reducible([mat([[0, -1], [1, -1]])])
        assert not red and wit is None

    def test_witness_is_actual_eigenvector(self):
        gens = [
            mat([[0, 1, -1], [1, 0, -1], [0, 0, -1]]),
            mat([[0, -1, 1], [0, -1, 0], [1, -1, 0]]),
        ]
        red, wit = q_reducible(gens)
        assert red and wit["dim"] == 1
        v = wit["vector"]
        for s, g in zip(wit["signs"], gens):
            gv = tuple(sum(g[i][j] * v[j] for j in range(3)) for i in range(3))
            assert gv == tuple(s * x for x in v)

    def test_full_cube_group_irreducible(self):
        red, wit = q_reducible(_MODEL_GENERATORS["S4"])
        assert not red

# Copyright © 2019-2020 The incomm developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice (including the next
# paragraph) shall be included in all copies or substantial portions of the
# Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from incomm.core import catalog
from incomm.core.error import DomainError
from incomm.core.schmidt import (
    entanglement_entropy, majorizes, min_pt_eigenvalue, nielsen_transformable,
    party_cut_obstructions, schmidt, schmidt_rank
)
from incomm.core.state import (
    amplitude_matrix, apply_local_unitaries, make_local_unitary, make_state, reduce
)
from test.common import IncommTestCase, random_state, random_unitary


def probabilities(n):
    """ Strategy for probability vectors of length n, in decreasing order """
    return st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=n, max_size=n).map(
        lambda v: sorted((x / sum(v) for x in v), reverse=True))


def vectors():
    return st.integers(min_value=1, max_value=6).flatmap(probabilities)


def triples():
    return st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(probabilities(n), probabilities(n), probabilities(n)))


def two_qutrits(spectrum):
    """ Two-qutrit state whose reduced states have the given spectrum """
    return make_state([3, 3], np.diag(np.sqrt(spectrum)).ravel())


class TestSchmidt(IncommTestCase):
    def test_epr(self):
        self.assert_close(schmidt(catalog.epr(), [0]).coefficients, [1 / np.sqrt(2)] * 2)

    def test_dim8_psi(self):
        split = schmidt(catalog.dim8_psi(), [0])
        self.assert_close(split.coefficients, [5 / np.sqrt(37), 2 * np.sqrt(3) / np.sqrt(37)])
        self.assertEqual(split.cut, ((0,), (1, 2)))

    def test_product(self):
        state = make_state([2, 2], [1, 0, 0, 0])
        self.assert_close(schmidt(state, [0]).coefficients, [1, 0])
        self.assertEqual(schmidt_rank(state, [0]), 1)

    def test_reconstruction(self):
        rng = np.random.default_rng(11)
        for left in ([0], [1], [0, 2], [2, 1]):
            with self.subTest(left=left):
                state = random_state(rng, [2, 3, 2])
                split = schmidt(state, left)
                self.assertAlmostEqual(np.sum(split.coefficients ** 2), 1, delta=1e-9)
                self.assertEqual(len(split.coefficients),
                                 min(amplitude_matrix(state, left).shape))
                self.assert_close(split.reconstruct(), amplitude_matrix(state, left).ravel(),
                                  1e-8)

    def test_matches_reductions(self):
        rng = np.random.default_rng(12)
        state = random_state(rng, [3, 2, 2])
        weights = schmidt(state, [0]).coefficients ** 2
        self.assert_close(weights, reduce(state, [0]).spectrum(), 1e-8)
        self.assert_close(weights, reduce(state, [1, 2]).spectrum()[:3], 1e-8)

    def test_trivial_cut(self):
        with self.assertRaises(DomainError):
            schmidt(catalog.ghz(3), [])
        with self.assertRaises(DomainError):
            schmidt(catalog.ghz(3), [0, 1, 2])

    def test_entropy(self):
        self.assertAlmostEqual(entanglement_entropy(catalog.epr(), [0]), 1, delta=1e-12)
        self.assertAlmostEqual(entanglement_entropy(catalog.two_ghz(), [0]), 2, delta=1e-12)
        self.assertEqual(schmidt_rank(catalog.two_ghz(), [1]), 4)


class TestMajorization(IncommTestCase):
    def test_examples(self):
        self.assertTrue(majorizes([0.5, 0.5], [1, 0]))
        self.assertFalse(majorizes([1, 0], [0.5, 0.5]))
        self.assertFalse(majorizes([0.5, 0.25, 0.25], [0.4, 0.4, 0.2]))
        self.assertFalse(majorizes([0.4, 0.4, 0.2], [0.5, 0.25, 0.25]))

    def test_padding(self):
        self.assertTrue(majorizes([0.25] * 4, [0.5, 0.5]))
        self.assertFalse(majorizes([0.5, 0.5], [0.25] * 4))

    def test_unsorted_input(self):
        self.assertTrue(majorizes([0.2, 0.8], [1, 0]))

    def test_sum_mismatch(self):
        with self.assertRaises(DomainError):
            majorizes([0.5, 0.5], [0.5, 0.4])

    @settings(max_examples=1000, deadline=None)
    @given(vectors())
    def test_uniform_is_majorized(self, p):
        self.assertTrue(majorizes(np.full(len(p), 1 / len(p)), p))

    @settings(deadline=None)
    @given(vectors())
    def test_reflexive(self, p):
        self.assertTrue(majorizes(p, p))

    @settings(max_examples=1000, deadline=None)
    @given(triples())
    def test_transitive(self, vecs):
        p, q, r = vecs
        if majorizes(p, q) and majorizes(q, r):
            self.assertTrue(majorizes(p, r, 2e-9))


class TestNielsen(IncommTestCase):
    def test_from_epr(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            self.assertTrue(nielsen_transformable(catalog.epr(), random_state(rng, [2, 2]), [0]))

    def test_equal_spectra(self):
        rng = np.random.default_rng(14)
        state = random_state(rng, [3, 3])
        rotated = apply_local_unitaries(state, [make_local_unitary(0, random_unitary(rng, 3)),
                                                make_local_unitary(1, random_unitary(rng, 3))])
        self.assertTrue(nielsen_transformable(state, rotated, [0]))
        self.assertTrue(nielsen_transformable(rotated, state, [0]))

    def test_incommensurate_qutrits(self):
        first = two_qutrits([0.5, 0.25, 0.25])
        second = two_qutrits([0.4, 0.4, 0.2])
        self.assertFalse(nielsen_transformable(first, second, [0]))
        self.assertFalse(nielsen_transformable(second, first, [0]))

    def test_self(self):
        state = catalog.three_epr()
        for left in ([0], [1], [0, 2]):
            self.assertTrue(nielsen_transformable(state, state, left))

    def test_shape_mismatch(self):
        with self.assertRaises(DomainError):
            nielsen_transformable(catalog.epr(), catalog.ghz(3), [0])

    def test_party_cuts(self):
        product = make_state([4, 4, 4], np.eye(64)[0])
        self.assertEqual(party_cut_obstructions(catalog.two_ghz(), product), [])
        self.assertEqual(party_cut_obstructions(make_state([2, 2, 2], np.eye(8)[0]),
                                                catalog.ghz(3)), [0, 1, 2])


class TestPartialTransposeWitness(IncommTestCase):
    def test_three_epr(self):
        self.assertAlmostEqual(min_pt_eigenvalue(reduce(catalog.three_epr(), [1, 2]), 4, 4),
                               -1 / 8, delta=1e-9)

    def test_two_ghz(self):
        self.assertGreaterEqual(min_pt_eigenvalue(reduce(catalog.two_ghz(), [1, 2]), 4, 4),
                                -1e-10)

    def test_product(self):
        state = make_state([2, 3], np.kron([0.6, 0.8], [0, 1, 0]))
        self.assertGreaterEqual(min_pt_eigenvalue(reduce(state, [0, 1]), 2, 3), -1e-10)

    def test_local_unitaries(self):
        rng = np.random.default_rng(15)
        for _ in range(20):
            state = random_state(rng, [2, 3, 2])
            rotated = apply_local_unitaries(
                state, [make_local_unitary(p, random_unitary(rng, d))
                        for p, d in enumerate(state.party_dims)])
            self.assertAlmostEqual(min_pt_eigenvalue(reduce(state, [0, 1]), 2, 3),
                                   min_pt_eigenvalue(reduce(rotated, [0, 1]), 2, 3), delta=1e-9)

    def test_dimension_mismatch(self):
        with self.assertRaises(DomainError):
            min_pt_eigenvalue(reduce(catalog.ghz(3), [0, 1]), 2, 3)

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

from incomm.core import catalog
from incomm.core.error import DomainError
from incomm.core.invariants import (
    VerdictKind, certify_incommensurate, compute_invariants, hidden_from_single_party,
    hidden_param_lower_bound, i5_direct, i5_pairwise, purity_per_party
)
from incomm.core.state import apply_local_unitaries, make_local_unitary, make_state, reduce
from test.common import IncommTestCase, random_state, random_unitary


def random_orbit_point(rng, state):
    return apply_local_unitaries(state, [make_local_unitary(p, random_unitary(rng, d))
                                         for p, d in enumerate(state.party_dims)])


class TestInvariants(IncommTestCase):
    def test_product(self):
        values = compute_invariants(make_state([2, 2, 2], np.eye(8)[0]))
        for key, value in values.as_dict().items():
            self.assertAlmostEqual(value, 1, delta=1e-12, msg=key)

    def test_dim8_pair(self):
        psi = compute_invariants(catalog.dim8_psi())
        phi = compute_invariants(catalog.dim8_phi())
        for values in (psi, phi):
            self.assertAlmostEqual(values.i1, 1, delta=1e-12)
            for i in (values.i2, values.i3, values.i4):
                self.assertAlmostEqual(i, 769 / 1369, delta=1e-12)
        self.assertAlmostEqual(psi.i5, 0.343, delta=1e-3)
        self.assertAlmostEqual(phi.i5, 0.242, delta=1e-3)
        self.assertAlmostEqual(psi.i5, 17353 / 50653, delta=1e-12)

    def test_threshold_states(self):
        for i, expected in ((1, 1 / 9), (2, 1 / 18), (3, 0)):
            with self.subTest(phi=i):
                self.assertAlmostEqual(compute_invariants(catalog.phi(i)).i5, expected,
                                       delta=1e-10)

    def test_two_ghz_three_epr(self):
        self.assertAlmostEqual(i5_direct(catalog.two_ghz()), 1 / 16, delta=1e-12)
        self.assertAlmostEqual(i5_direct(catalog.three_epr()), 1 / 64, delta=1e-12)

    def test_three_parties_only(self):
        with self.assertRaises(DomainError):
            compute_invariants(catalog.epr())
        with self.assertRaises(DomainError):
            compute_invariants(catalog.ghz(4))

    def test_purities(self):
        self.assert_close(purity_per_party(catalog.ghz(3)), [0.5] * 3)
        self.assert_close(purity_per_party(catalog.two_ghz()), [0.25] * 3)
        self.assert_close(purity_per_party(make_state([2, 2, 2], np.eye(8)[0])), [1] * 3)
        self.assert_close(purity_per_party(catalog.ghz(5)), [0.5] * 5)

    def test_two_paths(self):
        rng = np.random.default_rng(16)
        for _ in range(50):
            state = random_state(rng, list(rng.integers(2, 5, size=3)))
            values = compute_invariants(state)
            self.assertAlmostEqual(values.i5, i5_pairwise(state), delta=1e-9)
            for p, purity in enumerate((values.i2, values.i3, values.i4)):
                spectrum = reduce(state, [p]).spectrum()
                self.assertAlmostEqual(purity, np.sum(spectrum ** 2), delta=1e-9)
                self.assertGreaterEqual(purity, 1 / state.party_dims[p] - 1e-9)

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(17)
        for _ in range(500):
            state = random_state(rng, list(rng.integers(2, 4, size=3)))
            before = compute_invariants(state).as_dict()
            after = compute_invariants(random_orbit_point(rng, state)).as_dict()
            for key in before:
                self.assertAlmostEqual(before[key], after[key], delta=1e-8, msg=key)


class TestParameterCounting(IncommTestCase):
    def test_bound(self):
        self.assertEqual(hidden_param_lower_bound(3), 5)
        self.assertEqual(hidden_param_lower_bound(4), 18)
        self.assertEqual(hidden_param_lower_bound(5), 47)

    def test_hidden(self):
        self.assertEqual(hidden_from_single_party(3), 2)
        self.assertEqual(hidden_from_single_party(4), 14)
        self.assertEqual(hidden_from_single_party(2), 0)

    def test_too_few_parties(self):
        for k in (1, 0, -3):
            with self.assertRaises(DomainError):
                hidden_param_lower_bound(k)
            with self.assertRaises(DomainError):
                hidden_from_single_party(k)


class TestCertifier(IncommTestCase):
    def test_dim8_pair(self):
        verdict = certify_incommensurate(catalog.dim8_psi(), catalog.dim8_phi())
        self.assertIs(verdict.kind, VerdictKind.Incommensurate)
        self.assertEqual(verdict.witness.quantity, 'I5')
        self.assertAlmostEqual(verdict.witness.first, 0.343, delta=1e-3)
        self.assertAlmostEqual(verdict.witness.second, 0.242, delta=1e-3)

    def test_phi_pairs(self):
        expected = {(1, 2): (1 / 9, 1 / 18), (1, 3): (1 / 9, 0), (2, 3): (1 / 18, 0)}
        for (i, j), (first, second) in expected.items():
            with self.subTest(pair=(i, j)):
                verdict = certify_incommensurate(catalog.phi(i), catalog.phi(j))
                self.assertIs(verdict.kind, VerdictKind.Incommensurate)
                self.assertEqual(verdict.witness.quantity, 'I5')
                self.assertAlmostEqual(verdict.witness.first, first, delta=1e-10)
                self.assertAlmostEqual(verdict.witness.second, second, delta=1e-10)

    def test_two_ghz_three_epr(self):
        verdict = certify_incommensurate(catalog.two_ghz(), catalog.three_epr())
        self.assertIs(verdict.kind, VerdictKind.Incommensurate)
        self.assertEqual([w.quantity for w in verdict.witnesses],
                         ['I5', 'min-PT AB', 'min-PT AC', 'min-PT BC'])
        witness = verdict.witness_for('min-PT BC')
        self.assertGreaterEqual(witness.first, -1e-10)
        self.assertAlmostEqual(witness.second, -1 / 8, delta=1e-9)
        self.assertIsNone(verdict.witness_for('I2'))

    def test_not_locally_isospectral(self):
        verdict = certify_incommensurate(catalog.ghz(3), make_state([2, 2, 2], np.eye(8)[0]))
        self.assertIs(verdict.kind, VerdictKind.NotLocallyIsospectral)
        self.assertEqual(verdict.party, 0)
        self.assertIsNone(verdict.witness)

    def test_orbits(self):
        rng = np.random.default_rng(18)
        for _ in range(100):
            state = random_state(rng, list(rng.integers(2, 4, size=3)))
            verdict = certify_incommensurate(state, random_orbit_point(rng, state))
            self.assertIs(verdict.kind, VerdictKind.Inconclusive)
            self.assertEqual(verdict.witnesses, ())

    def test_shape_mismatch(self):
        with self.assertRaises(DomainError):
            certify_incommensurate(catalog.two_ghz(), catalog.dim8_psi())

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

"""
Named states

Multi-qubit parties are laid out qubit 1 first: a party holding qubits (A1, A2) has the local basis
|A1 A2> with A1 as the most significant digit.
"""

import math
from typing import Callable, Dict, List, Sequence

import numpy as np

from incomm.core.error import fail
from incomm.core.state import PureState, make_state, regroup_parties, tensor_states

Builder = Callable[[Sequence[complex]], PureState]

SQRT2: float = math.sqrt(2)


def epr(minus: bool = False) -> PureState:
    return make_state([2, 2], [1 / SQRT2, 0, 0, -1 / SQRT2 if minus else 1 / SQRT2])


def ghz(k: int) -> PureState:
    if k < 2:
        fail('ghz needs at least 2 qubits, got {}'.format(k))
    amps = np.zeros(2 ** k, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / SQRT2
    return make_state([2] * k, amps)


def two_ghz() -> PureState:
    # qubits A1 B1 C1 A2 B2 C2
    return regroup_parties(tensor_states([ghz(3), ghz(3)]), [[0, 3], [1, 4], [2, 5]])


def three_epr(minus: bool = False) -> PureState:
    """! EPR pairs shared as A1-B1, A2-C1 and B2-C2. """
    # qubits A1 B1 A2 C1 B2 C2
    pairs: PureState = tensor_states([epr(minus)] * 3)
    return regroup_parties(pairs, [[0, 2], [1, 4], [3, 5]])


def lu_pair(a_plus: complex, a_minus: complex, theta: float) -> PureState:
    """!
    a_plus |000> + a_minus |vvv> with |v> = cos(theta) |0> + sin(theta) |1>, normalized

    Every state of this form has the same spectrum on its three one-party density matrices.
    """
    zero = np.array([1, 0], dtype=np.complex128)
    v = np.array([math.cos(theta), math.sin(theta)], dtype=np.complex128)
    amps = a_plus * np.kron(np.kron(zero, zero), zero) + a_minus * np.kron(np.kron(v, v), v)
    return make_state([2, 2, 2], amps, normalize=True, where='lu_pair')


def dim8_psi() -> PureState:
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = 2 * math.sqrt(3 / 37)
    amps[7] = -5 / math.sqrt(37)
    return make_state([2, 2, 2], amps, normalize=True)


def dim8_phi() -> PureState:
    return lu_pair(4 * math.sqrt(2 / 37), -5 / math.sqrt(37), math.pi / 4)


def threshold(alpha: complex, beta: complex, gamma: complex) -> PureState:
    """!
    Qutrit ((3,2)) threshold encoding

    The secret value s contributes the three kets |t, t+s, t+2s> (mod 3). The raw expansion has
    norm sqrt(3) for a normalized secret, the result is normalized.
    """
    amps = np.zeros(27, dtype=np.complex128)
    for s, weight in enumerate((alpha, beta, gamma)):
        for t in range(3):
            amps[9 * t + 3 * ((t + s) % 3) + (t + 2 * s) % 3] = weight
    if np.linalg.norm(amps) <= 1e-12:
        fail('threshold state of a zero secret')
    return make_state([3, 3, 3], amps, normalize=True, where='threshold')


def phi(i: int) -> PureState:
    """! The three orthogonal threshold states with distinct hidden invariants. """
    if i == 1:
        return threshold(1, 0, 0)
    elif i == 2:
        return threshold(0, 1 / SQRT2, 1 / SQRT2)
    elif i == 3:
        return threshold(0, 1 / SQRT2, -1 / SQRT2)
    fail('no phi{} state, expected 1, 2 or 3'.format(i))


def _no_params(fn: Callable[[], PureState]) -> Builder:
    def builder(params: Sequence[complex]) -> PureState:
        if len(params) != 0:
            fail('no parameter expected, got {}'.format(len(params)))
        return fn()
    return builder


def _ghz_builder(params: Sequence[complex]) -> PureState:
    if len(params) != 1 or params[0].imag != 0 or params[0].real != int(params[0].real):
        fail('ghz expects one integer parameter (the number of qubits)')
    return ghz(int(params[0].real))


def _threshold_builder(params: Sequence[complex]) -> PureState:
    if len(params) != 3:
        fail('threshold expects three amplitudes (alpha, beta, gamma), got {}'.format(
            len(params)))
    return threshold(params[0], params[1], params[2])


def _lu_pair_builder(params: Sequence[complex]) -> PureState:
    if len(params) != 3 or params[2].imag != 0:
        fail('lu_pair expects a_plus, a_minus and a real angle theta')
    return lu_pair(params[0], params[1], params[2].real)


BUILDERS: Dict[str, Builder] = {
    'epr': _no_params(epr),
    'epr_minus': _no_params(lambda: epr(minus=True)),
    'ghz': _ghz_builder,
    'two_ghz': _no_params(two_ghz),
    'three_epr': _no_params(three_epr),
    'three_epr_minus': _no_params(lambda: three_epr(minus=True)),
    'dim8_psi': _no_params(dim8_psi),
    'dim8_phi': _no_params(dim8_phi),
    'lu_pair': _lu_pair_builder,
    'threshold': _threshold_builder,
    'phi1': _no_params(lambda: phi(1)),
    'phi2': _no_params(lambda: phi(2)),
    'phi3': _no_params(lambda: phi(3)),
}


def names() -> List[str]:
    return list(BUILDERS)


def build(name: str, params: Sequence[complex] = ()) -> PureState:
    if name not in BUILDERS:
        fail('unknown state `{}`, expected one of {}'.format(name, ', '.join(BUILDERS)),
             'catalog')
    return BUILDERS[name]([complex(p) for p in params])

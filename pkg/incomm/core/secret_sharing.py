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
The ((3,2)) qutrit threshold scheme

A secret qutrit a|0> + b|1> + c|2> is spread over three qutrit shares, Alice holding the first, Bob
the second and Charlie the third. Any two shares give the secret back with mod 3 adders only, any
single share is maximally mixed.

This module also plays the attack where Bob cyclically shifts his share before a joint decoding of
a classical trit, and checks the countermeasure: encoding trits into states that no local action
can map onto each other.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from incomm.core import catalog
from incomm.core.error import fail
from incomm.core.invariants import (
    CERTIFY_TOL, IncommensurabilityVerdict, certify_incommensurate
)
from incomm.core.linalg import NORM_TOL, ComplexMatrix, ComplexVector
from incomm.core.schmidt import SchmidtDecomposition, schmidt
from incomm.core.state import (
    LocalUnitary, PureState, apply_local_unitary, make_state, overlap
)

ALICE: int = 0
BOB: int = 1
CHARLIE: int = 2

## Adders (control, target, times) of each decoding circuit, applied in order
DECODERS: Dict[str, Tuple[Tuple[int, int, int], ...]] = {
    'AB': ((ALICE, BOB, 1), (BOB, ALICE, 1)),
    'AC': ((CHARLIE, ALICE, 2), (ALICE, CHARLIE, 2)),
    'BC': ((BOB, CHARLIE, 2), (CHARLIE, BOB, 2)),
}

## Register holding the secret after each decoding circuit
SECRET_REGISTERS: Dict[str, int] = {'AB': ALICE, 'AC': ALICE, 'BC': CHARLIE}

SHIFT: ComplexMatrix = np.roll(np.eye(3, dtype=np.complex128), 1, axis=0)


@dataclass(frozen=True)
class SecretQutrit:
    a: complex
    b: complex
    c: complex

    def vector(self) -> ComplexVector:
        return np.array([self.a, self.b, self.c], dtype=np.complex128)


@dataclass(frozen=True)
class DecodeResult:
    secret_register: int
    post_state: PureState
    reconstructed: SecretQutrit
    fidelity: float
    ## Weight of the leading product term between the secret register and the other two
    separability: float


@dataclass(frozen=True)
class CheatRecord:
    b: int
    pair: str
    recovered: int
    bob_inference: Optional[int]


def make_secret(a: complex, b: complex, c: complex, normalize: bool = False) -> SecretQutrit:
    vec = np.array([a, b, c], dtype=np.complex128)
    norm: float = float(np.linalg.norm(vec))
    if norm <= 1e-12:
        fail('zero secret', 'secret')
    if normalize:
        vec = vec / norm
    elif abs(norm - 1) > NORM_TOL:
        fail('secret has norm {!r}, expected 1'.format(norm), 'secret')
    return SecretQutrit(complex(vec[0]), complex(vec[1]), complex(vec[2]))


def basis_secret(trit: int) -> SecretQutrit:
    vec: List[complex] = [0, 0, 0]
    vec[trit % 3] = 1
    return SecretQutrit(*vec)


def _check_qutrit(state: PureState, party: int) -> None:
    state.check_party(party)
    if state.party_dims[party] != 3:
        fail('party {} has dimension {}, expected a qutrit'.format(
            party, state.party_dims[party]))


def mod3_adder(state: PureState, control: int, target: int, times: int = 1) -> PureState:
    """! |..c..t..> -> |..c..(t + times * c mod 3)..>, a permutation of the basis. """
    _check_qutrit(state, control)
    _check_qutrit(state, target)
    if control == target:
        fail('adder with control and target both on party {}'.format(control))
    if times not in (1, 2):
        fail('adder applied {} times, expected 1 or 2'.format(times))
    for _ in range(times):
        # control on axis 0, target on axis 1
        moved = np.moveaxis(state.tensor(), [control, target], [0, 1])
        out = np.empty_like(moved)
        for c in range(3):
            out[c] = np.roll(moved[c], c, axis=0)
        amps = np.moveaxis(out, [0, 1], [control, target]).ravel()
        state = make_state(state.party_dims, amps)
    return state


def qss_encode(secret: SecretQutrit) -> PureState:
    return catalog.threshold(secret.a, secret.b, secret.c)


def _phase_aligned(vec: ComplexVector, reference: Optional[ComplexVector]) -> ComplexVector:
    if reference is not None:
        ov = complex(np.vdot(vec, reference))
    else:
        ov = complex(np.conj(vec[int(np.argmax(np.abs(vec)))]))
    if abs(ov) <= 1e-12:
        return vec
    res: ComplexVector = vec * (ov / abs(ov))
    return res


def qss_decode(state: PureState, pair: str, secret: Optional[SecretQutrit] = None
               ) -> DecodeResult:
    """!
    Reconstruct the secret from the two shares named by @c pair

    @param state @b PureState Three-qutrit state holding the shares
    @param pair @b str One of AB, AC, BC
    @param secret @b SecretQutrit Optional reference secret for the fidelity
    @return @b DecodeResult The reconstructed qutrit is the leading Schmidt vector of the secret
        register against the other two. Without a reference, the fidelity is the weight of that
        leading term: it is 1 exactly when the register holds a pure qutrit.
    """
    if state.party_dims != (3, 3, 3):
        fail('decoding needs dims [3, 3, 3], got {}'.format(list(state.party_dims)))
    if pair not in DECODERS:
        fail('unknown pair `{}`, expected AB, AC or BC'.format(pair))
    for control, target, times in DECODERS[pair]:
        state = mod3_adder(state, control, target, times)
    register: int = SECRET_REGISTERS[pair]
    split: SchmidtDecomposition = schmidt(state, [register])
    weight: float = float(split.coefficients[0] ** 2)
    reference = secret.vector() if secret is not None else None
    rec = _phase_aligned(split.left_vectors[:, 0], reference)
    fidelity: float = weight
    if reference is not None:
        fidelity *= abs(complex(np.vdot(reference, rec))) ** 2
    logging.debug('decoded on %s: register %d, weight %.12g', pair, register, weight)
    return DecodeResult(register, state, SecretQutrit(complex(rec[0]), complex(rec[1]),
                                                      complex(rec[2])),
                        fidelity, weight)


def residual_state(result: DecodeResult) -> PureState:
    """! State of the two registers that do not hold the secret, once it is disentangled. """
    split: SchmidtDecomposition = schmidt(result.post_state, [result.secret_register])
    vec = _phase_aligned(split.right_vectors[:, 0], None)
    return make_state([3, 3], vec, normalize=True)


def cheat_shift(state: PureState, party: int) -> PureState:
    """! Cyclic shift |0> -> |1> -> |2> -> |0> on one share. """
    _check_qutrit(state, party)
    return apply_local_unitary(state, LocalUnitary(party, SHIFT))


def undo_cheat(state: PureState, party: int) -> PureState:
    return cheat_shift(cheat_shift(state, party), party)


def recovered_trit(result: DecodeResult, tol: float = 1e-9) -> int:
    """! Basis value of the secret register, which must be certain. """
    probs = np.abs(result.reconstructed.vector()) ** 2
    trit: int = int(np.argmax(probs))
    if result.separability < 1 - tol or probs[trit] < 1 - tol:
        fail('secret register does not hold a basis state on decoding')
    return trit


def _decode_trit(trit: int, pair: str, shifted: bool) -> int:
    state: PureState = qss_encode(basis_secret(trit))
    if shifted:
        state = cheat_shift(state, BOB)
    return recovered_trit(qss_decode(state, pair))


def run_cheat_demo() -> List[CheatRecord]:
    """!
    Bob shifts his share of an encoded trit, then each pair decodes

    Bob knows the effect of his shift on every honest outcome, so on pairs he takes part in he
    infers the true trit from the outcome he observes with his partner.
    """
    table: List[CheatRecord] = []
    for b in range(3):
        for pair in DECODERS:
            recovered: int = _decode_trit(b, pair, True)
            inference: Optional[int] = None
            if 'B' in pair:
                candidates: List[int] = [t for t in range(3)
                                         if _decode_trit(t, pair, True) == recovered]
                assert len(candidates) == 1
                inference = candidates[0]
            table.append(CheatRecord(b, pair, recovered, inference))
    return table


def joint_measurement(state: PureState, candidates: Sequence[PureState]) -> List[float]:
    """!
    Outcome probabilities of the orthogonal measurement onto the candidate states

    This is what the parties can do once they bring their shares together.
    """
    for i, j in combinations(range(len(candidates)), 2):
        if abs(overlap(candidates[i], candidates[j])) > NORM_TOL:
            fail('candidates {} and {} are not orthogonal'.format(i, j))
    return [abs(overlap(c, state)) ** 2 for c in candidates]


def prevention_check(tol: float = CERTIFY_TOL
                     ) -> List[Tuple[str, str, IncommensurabilityVerdict]]:
    """! Certify every pair of the orthogonal phi states as incommensurate. """
    states: Dict[str, PureState] = {'phi{}'.format(i): catalog.phi(i) for i in (1, 2, 3)}
    return [(first, second, certify_incommensurate(states[first], states[second], tol))
            for first, second in combinations(states, 2)]

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
Local unitary invariants of three-party pure states and the incommensurability certifier

For a state sum a_ijk |e_i e_j e_k>, the invariants are
  I1 = sum a_ijk a*_ijk                                         (the norm)
  I2, I3, I4 = tr rho_A^2, tr rho_B^2, tr rho_C^2              (degree four)
  I5 = sum a_ijk a*_ilm a_nlo a*_pjo a_pqm a*_nqk              (degree six)
Each index of I5 joins the same party slot of an amplitude and a conjugated amplitude, which is what
makes it unchanged by local unitaries.

Two states whose one-party density matrices have the same spectra can only be transformed into
each other by LOCC if they are related by local unitaries. A differing invariant therefore proves
them incommensurate.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from incomm.core.error import fail
from incomm.core.schmidt import min_pt_eigenvalue
from incomm.core.state import PureState, local_spectra, reduce

## Smallest difference between two invariants reported as a witness
CERTIFY_TOL: float = 1e-6
## Largest imaginary residue accepted on a contraction that must be real
IMAGINARY_TOL: float = 1e-9

I5_CONTRACTION: str = 'ijk,ilm,nlo,pjo,pqm,nqk->'


@dataclass(frozen=True)
class InvariantSet:
    i1: float
    i2: float
    i3: float
    i4: float
    i5: float

    def as_dict(self) -> Dict[str, float]:
        return {'i1': self.i1, 'i2': self.i2, 'i3': self.i3, 'i4': self.i4, 'i5': self.i5}


class VerdictKind(Enum):
    NotLocallyIsospectral = 'NotLocallyIsospectral'
    Incommensurate = 'Incommensurate'
    Inconclusive = 'Inconclusive'


@dataclass(frozen=True)
class Witness:
    """! A local unitary invariant that takes different values on the two states. """
    quantity: str
    first: float
    second: float

    def __str__(self) -> str:
        return '{}: {!r} vs {!r}'.format(self.quantity, self.first, self.second)


@dataclass(frozen=True)
class IncommensurabilityVerdict:
    kind: VerdictKind
    witnesses: Tuple[Witness, ...] = field(default=())
    ## Party whose spectra differ, for NotLocallyIsospectral verdicts
    party: Optional[int] = None

    @property
    def witness(self) -> Optional[Witness]:
        return self.witnesses[0] if len(self.witnesses) != 0 else None

    def witness_for(self, quantity: str) -> Optional[Witness]:
        for w in self.witnesses:
            if w.quantity == quantity:
                return w
        return None


def _real(value: complex, what: str) -> float:
    if abs(value.imag) >= IMAGINARY_TOL:
        fail('{} has an imaginary residue of {:.3g}'.format(what, abs(value.imag)),
             'invariants')
    return float(value.real)


def _check_three_parties(state: PureState) -> npt.NDArray[np.complex128]:
    if state.parties != 3:
        fail('invariants are defined for 3 parties, got {}'.format(state.parties))
    return state.tensor()


def purity_per_party(state: PureState) -> List[float]:
    return [reduce(state, [p]).purity() for p in range(state.parties)]


def i5_direct(state: PureState) -> float:
    """! I5 summed term by term over the nine indices, in a fixed loop order. """
    a = _check_three_parties(state)
    c = a.conj()
    return _real(complex(np.einsum(I5_CONTRACTION, a, c, a, c, a, c, optimize=False)), 'I5')


def i5_pairwise(state: PureState) -> float:
    """!
    I5 through three intermediate tensors

    P[j,k,l,m] = sum_i a_ijk a*_ilm, Q[l,o,q,k] = sum_n a_nlo a*_nqk and R[q,m,j,o] = sum_p a_pqm
    a*_pjo are the same tensor T contracted over the first party, then the three copies are
    contracted together.
    """
    a = _check_three_parties(state)
    t = np.tensordot(a, a.conj(), axes=([0], [0]))
    # P[j,k,l,m] Q[l,o,q,k] -> [j,m,o,q]
    pq = np.tensordot(t, t, axes=([1, 2], [3, 0]))
    total = np.tensordot(pq, t, axes=([0, 1, 2, 3], [2, 1, 3, 0]))
    return _real(complex(total), 'I5')


def compute_invariants(state: PureState) -> InvariantSet:
    a = _check_three_parties(state)
    i1: float = _real(complex(np.vdot(a, a)), 'I1')
    purities: List[float] = purity_per_party(state)
    res: InvariantSet = InvariantSet(i1, purities[0], purities[1], purities[2], i5_direct(state))
    logging.debug('invariants of a state of dims %s: %s', list(state.party_dims), res)
    return res


def hidden_param_lower_bound(k: int) -> int:
    """!
    Lower bound on the number of real parameters of a k-qubit state that no local unitary changes

    2^k complex amplitudes under the unit norm leave 2^(k+1) - 1 real parameters, and the local
    group U(1) x SU(2)^k has dimension 3k + 1.
    """
    if k < 2:
        fail('parameter counting needs at least 2 parties, got {}'.format(k))
    return 2 ** (k + 1) - 2 - 3 * k


def hidden_from_single_party(k: int) -> int:
    """!
    Non-local parameters that no single party sees

    Each one-qubit density matrix exposes one eigenvalue. For k = 2 the bound degenerates and 0 is
    returned.
    """
    return max(0, hidden_param_lower_bound(k) - k)


def _differs(first: float, second: float, tol: float) -> bool:
    return abs(first - second) > tol


def certify_incommensurate(a: PureState, b: PureState, tol: float = CERTIFY_TOL
                           ) -> IncommensurabilityVerdict:
    """!
    Prove that two locally similar three-party states are LOCC incommensurate, when possible

    @return @b IncommensurabilityVerdict
        - NotLocallyIsospectral when some party sees different spectra, in which case nothing is
          claimed about commensurability;
        - Incommensurate with every invariant that differs, I2 to I5 first then the smallest
          eigenvalue of the partial transpose of each two-party reduction;
        - Inconclusive when all of them agree.
    """
    if a.party_dims != b.party_dims:
        fail('certifying states of dims {} and {}'.format(list(a.party_dims),
                                                          list(b.party_dims)))
    _check_three_parties(a)
    for p, (sa, sb) in enumerate(zip(local_spectra(a), local_spectra(b))):
        if np.max(np.abs(sa - sb)) > tol:
            logging.debug('party %d spectra differ: %s vs %s', p, sa, sb)
            return IncommensurabilityVerdict(VerdictKind.NotLocallyIsospectral, party=p)

    witnesses: List[Witness] = []
    ia: InvariantSet = compute_invariants(a)
    ib: InvariantSet = compute_invariants(b)
    for name in ('i2', 'i3', 'i4', 'i5'):
        va: float = ia.as_dict()[name]
        vb: float = ib.as_dict()[name]
        if _differs(va, vb, tol):
            witnesses.append(Witness(name.upper(), va, vb))
    names: str = 'ABC'
    for pair in combinations(range(3), 2):
        dl: int = a.party_dims[pair[0]]
        dr: int = a.party_dims[pair[1]]
        va = min_pt_eigenvalue(reduce(a, pair), dl, dr)
        vb = min_pt_eigenvalue(reduce(b, pair), dl, dr)
        if _differs(va, vb, tol):
            witnesses.append(Witness('min-PT ' + names[pair[0]] + names[pair[1]], va, vb))

    if len(witnesses) == 0:
        return IncommensurabilityVerdict(VerdictKind.Inconclusive)
    return IncommensurabilityVerdict(VerdictKind.Incommensurate, tuple(witnesses))

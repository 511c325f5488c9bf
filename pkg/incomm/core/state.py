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
Multipartite pure states

Amplitudes are stored in the canonical lexicographic basis order, party 0 being the most
significant digit: for dims [3, 3, 3] the ket |012> lives at index 0*9 + 1*3 + 2 = 5.
"""

import logging
from dataclasses import dataclass, field
from functools import reduce as fold
from typing import List, Sequence, Tuple, cast

import numpy as np
import numpy.typing as npt

from incomm.core.error import FailureCollector, fail
from incomm.core import linalg
from incomm.core.linalg import ComplexMatrix, ComplexVector, Spectrum


def _product(dims: Sequence[int]) -> int:
    return fold(lambda a, b: a * b, dims, 1)


@dataclass(frozen=True, eq=False)
class PureState:
    """!
    Normalized state vector shared between several parties

    Instances are treated as immutable: operations always return new states.
    """

    party_dims: Tuple[int, ...]
    amplitudes: ComplexVector = field(repr=False)

    @property
    def parties(self) -> int:
        return len(self.party_dims)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    def tensor(self) -> npt.NDArray[np.complex128]:
        """! Amplitudes as a tensor with one axis per party. """
        res: npt.NDArray[np.complex128] = self.amplitudes.reshape(self.party_dims)
        return res

    def check_party(self, party: int) -> None:
        if not 0 <= party < self.parties:
            fail('party {} out of range for a {}-party state'.format(party, self.parties))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    dim: int
    matrix: ComplexMatrix = field(repr=False)

    def spectrum(self) -> Spectrum:
        return linalg.eigenvalues(self.matrix)

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    party: int
    matrix: ComplexMatrix = field(repr=False)


def make_density_matrix(matrix: npt.ArrayLike) -> DensityMatrix:
    mat: ComplexMatrix = linalg.as_matrix(matrix)
    errors: FailureCollector = FailureCollector('density matrix')
    if mat.shape[0] != mat.shape[1]:
        errors.error('not square ({}x{})'.format(*mat.shape))
        errors.check()
    if not linalg.is_hermitian(mat):
        errors.error('not Hermitian')
        errors.check()
    trace: float = float(np.real(np.trace(mat)))
    if abs(trace - 1) > linalg.HERMITIAN_TOL:
        errors.error('trace is {!r}, expected 1'.format(trace))
    if linalg.eigenvalues(mat)[-1] < -linalg.HERMITIAN_TOL:
        errors.error('not positive semidefinite')
    errors.check()
    return DensityMatrix(int(mat.shape[0]), mat)


def make_local_unitary(party: int, matrix: npt.ArrayLike) -> LocalUnitary:
    mat: ComplexMatrix = linalg.as_matrix(matrix)
    if not linalg.is_unitary(mat):
        fail('matrix for party {} is not unitary'.format(party), 'local unitary')
    return LocalUnitary(party, mat)


def make_state(party_dims: Sequence[int], amplitudes: npt.ArrayLike, normalize: bool = False,
               where: str = 'state') -> PureState:
    """!
    Build a pure state, checking every constraint at once

    @param party_dims @b Sequence[int] Dimension of each party, each at least 2
    @param amplitudes @b ArrayLike Amplitudes in canonical order
    @param normalize @b bool Divide by the norm instead of requiring a unit vector
    @param where @b str Location reported with failures, typically a file name
    """
    dims: Tuple[int, ...] = tuple(int(d) for d in party_dims)
    amps: ComplexVector = np.array(amplitudes, dtype=np.complex128).ravel()
    errors: FailureCollector = FailureCollector(where)
    if len(dims) == 0:
        errors.error('a state needs at least one party')
    for i, d in enumerate(dims):
        if d < 2:
            errors.error('party {} has dimension {}, expected at least 2'.format(i, d))
    if len(dims) != 0 and amps.shape[0] != _product(dims):
        errors.error('{} amplitudes given for dims {} (expected {})'.format(
            amps.shape[0], list(dims), _product(dims)))
    norm: float = float(np.linalg.norm(amps))
    if norm <= 1e-12:
        errors.error('zero vector cannot be normalized')
    elif not normalize and abs(norm - 1) > linalg.NORM_TOL:
        errors.error('norm is {!r}, expected 1'.format(norm))
    elif not normalize and abs(norm - 1) > linalg.NORM_WARN_TOL:
        errors.warn('norm is {!r}, accepted within {:g} of 1'.format(norm, linalg.NORM_TOL))
    errors.check()
    if normalize:
        amps = amps / norm
    amps.setflags(write=False)
    return PureState(dims, amps)


def tensor_states(states: Sequence[PureState]) -> PureState:
    if len(states) == 0:
        fail('tensor product of an empty list of states')
    amps: ComplexVector = fold(lambda a, b: cast(ComplexVector, np.kron(a, b)),
                               [s.amplitudes for s in states])
    dims: List[int] = [d for s in states for d in s.party_dims]
    return make_state(dims, amps, normalize=True)


def regroup_parties(state: PureState, grouping: Sequence[Sequence[int]]) -> PureState:
    """!
    Merge parties into blocks

    Each block becomes one party whose local basis is the lexicographic product of the bases of its
    members, in the order they are listed. Blocks are laid out in the order given.
    """
    order: List[int] = [p for block in grouping for p in block]
    if sorted(order) != list(range(state.parties)) or any(len(b) == 0 for b in grouping):
        fail('grouping {} is not a partition of parties 0..{}'.format(
            [list(b) for b in grouping], state.parties - 1))
    dims: List[int] = [_product([state.party_dims[p] for p in block]) for block in grouping]
    amps = np.transpose(state.tensor(), order).ravel()
    return make_state(dims, amps, normalize=True)


def apply_local_unitary(state: PureState, u: LocalUnitary) -> PureState:
    state.check_party(u.party)
    if u.matrix.shape != (state.party_dims[u.party],) * 2:
        fail('{}x{} unitary applied to party {} of dimension {}'.format(
            u.matrix.shape[0], u.matrix.shape[1], u.party, state.party_dims[u.party]))
    moved = np.tensordot(u.matrix, state.tensor(), axes=([1], [u.party]))
    amps = np.moveaxis(moved, 0, u.party).ravel()
    return make_state(state.party_dims, amps, normalize=True)


def apply_local_unitaries(state: PureState, unitaries: Sequence[LocalUnitary]) -> PureState:
    for u in unitaries:
        state = apply_local_unitary(state, u)
    return state


def _check_subset(state: PureState, parties: Sequence[int]) -> List[int]:
    keep: List[int] = sorted(set(parties))
    if len(keep) == 0:
        fail('empty set of parties')
    for p in keep:
        state.check_party(p)
    return keep


def amplitude_matrix(state: PureState, left: Sequence[int]) -> ComplexMatrix:
    """! Amplitudes as a matrix with the @c left parties as rows and the others as columns. """
    rows: List[int] = _check_subset(state, left)
    cols: List[int] = [p for p in range(state.parties) if p not in rows]
    nrows: int = _product([state.party_dims[p] for p in rows])
    res: ComplexMatrix = np.transpose(state.tensor(), rows + cols).reshape(nrows, -1)
    return res


def reduce(state: PureState, keep: Sequence[int]) -> DensityMatrix:
    """!
    Partial trace over every party not in @c keep

    The kept parties stay in increasing order whatever the order of @c keep.
    """
    m: ComplexMatrix = amplitude_matrix(state, keep)
    logging.debug('reducing a state of dims %s onto parties %s', list(state.party_dims),
                  sorted(set(keep)))
    rho: ComplexMatrix = m @ m.conj().T
    return DensityMatrix(int(rho.shape[0]), rho)


def local_spectra(state: PureState) -> List[Spectrum]:
    return [reduce(state, [p]).spectrum() for p in range(state.parties)]


def overlap(s1: PureState, s2: PureState) -> complex:
    if s1.party_dims != s2.party_dims:
        fail('overlap between states of dims {} and {}'.format(
            list(s1.party_dims), list(s2.party_dims)))
    return complex(np.vdot(s1.amplitudes, s2.amplitudes))


def diagonalize_locally(state: PureState) -> PureState:
    """!
    Rotate every party into the eigenbasis of its own density matrix

    Afterwards each one-party density matrix is diagonal with decreasing entries, so two locally
    similar states become locally identical.
    """
    for p in range(state.parties):
        _, basis = linalg.hermitian_eigendecomposition(reduce(state, [p]).matrix)
        state = apply_local_unitary(state, LocalUnitary(p, basis.conj().T))
    return state


def basis_label(dims: Sequence[int], index: int) -> str:
    digits: List[str] = []
    for d in reversed(dims):
        index, digit = divmod(index, d)
        digits.append(str(digit) if d <= 10 else '{},'.format(digit))
    return ''.join(reversed(digits)).rstrip(',')


def ket_terms(state: PureState, tol: float = 1e-12) -> List[Tuple[str, complex]]:
    """! Non negligible amplitudes with their ket labels, in canonical order. """
    return [(basis_label(state.party_dims, i), complex(a))
            for i, a in enumerate(state.amplitudes) if abs(a) > tol]

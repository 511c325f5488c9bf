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
Bipartite structure of pure states: Schmidt decomposition, majorization and the Nielsen criterion
for two-party LOCC transformations, and the partial transpose entanglement witness.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from incomm.core import linalg
from incomm.core.error import fail
from incomm.core.linalg import ComplexMatrix, ComplexVector, Spectrum
from incomm.core.state import DensityMatrix, PureState, amplitude_matrix, reduce


Cut = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    coefficients: Spectrum = field(repr=False)
    ## Orthonormal columns, one per coefficient
    left_vectors: ComplexMatrix = field(repr=False)
    right_vectors: ComplexMatrix = field(repr=False)
    cut: Cut

    def rank(self, tol: float = linalg.SPECTRUM_TOL) -> int:
        return int(np.count_nonzero(self.coefficients > tol))

    def reconstruct(self) -> ComplexVector:
        """! Sum of c_i |l_i>|r_i>, in the (left parties, right parties) ordering. """
        res: ComplexVector = np.einsum('i,ai,bi->ab', self.coefficients, self.left_vectors,
                                       self.right_vectors).ravel()
        return res


def _check_cut(state: PureState, left: Sequence[int]) -> Cut:
    lhs: Tuple[int, ...] = tuple(sorted(set(left)))
    for p in lhs:
        state.check_party(p)
    if len(lhs) == 0 or len(lhs) == state.parties:
        fail('trivial cut {} of a {}-party state'.format(list(lhs), state.parties))
    return lhs, tuple(p for p in range(state.parties) if p not in lhs)


def schmidt(state: PureState, left: Sequence[int]) -> SchmidtDecomposition:
    cut: Cut = _check_cut(state, left)
    u, s, v = linalg.singular_value_decomposition(amplitude_matrix(state, cut[0]))
    logging.debug('schmidt coefficients across %s|%s: %s', list(cut[0]), list(cut[1]), s)
    # amplitudes are u diag(s) v^H, so the right Schmidt vectors are the conjugated columns of v
    return SchmidtDecomposition(s, u, v.conj(), cut)


def schmidt_rank(state: PureState, left: Sequence[int], tol: float = linalg.SPECTRUM_TOL) -> int:
    return schmidt(state, left).rank(tol)


def entanglement_entropy(state: PureState, left: Sequence[int]) -> float:
    """! Von Neumann entropy of the cut, in bits. """
    weights = schmidt(state, left).coefficients ** 2
    weights = weights[weights > 1e-15]
    return float(-np.sum(weights * np.log2(weights)))


def _pad(values: npt.ArrayLike, length: int) -> Spectrum:
    spec: Spectrum = linalg.as_spectrum(values)
    return np.concatenate([spec, np.zeros(length - spec.shape[0])])


def majorizes(p: npt.ArrayLike, q: npt.ArrayLike, tol: float = linalg.SPECTRUM_TOL) -> bool:
    """!
    Whether p is majorized by q (p < q)

    Both vectors are sorted in decreasing order and padded with zeros to the same length, then every
    prefix sum of p must not exceed the matching prefix sum of q.

    @param p @b Spectrum The candidate majorized vector
    @param q @b Spectrum The candidate majorizing vector
    @param tol @b float Slack allowed on the sums and on every prefix comparison
    """
    length: int = max(np.size(p), np.size(q))
    lhs: Spectrum = _pad(p, length)
    rhs: Spectrum = _pad(q, length)
    if abs(lhs.sum() - rhs.sum()) > tol:
        fail('majorization between vectors of sums {!r} and {!r}'.format(lhs.sum(), rhs.sum()))
    return bool(np.all(np.cumsum(lhs) <= np.cumsum(rhs) + tol))


def nielsen_transformable(source: PureState, target: PureState, left: Sequence[int],
                          tol: float = linalg.SPECTRUM_TOL) -> bool:
    """!
    Whether source can be turned into target by LOCC between the two sides of the cut

    Nielsen's criterion: the reduced spectrum of the source on one side must be majorized by the
    one of the target.
    """
    if source.party_dims != target.party_dims:
        fail('comparing states of dims {} and {}'.format(
            list(source.party_dims), list(target.party_dims)))
    cut: Cut = _check_cut(source, left)
    return majorizes(reduce(source, cut[0]).spectrum(), reduce(target, cut[0]).spectrum(), tol)


def party_cut_obstructions(source: PureState, target: PureState,
                           tol: float = linalg.SPECTRUM_TOL) -> List[int]:
    """!
    Parties whose one-versus-rest cut forbids a multiparty LOCC transformation

    A protocol between all parties is in particular a two-party protocol between any single party
    and the merged rest, so the Nielsen criterion has to hold on every such cut. A non-empty result
    proves that source cannot be turned into target.
    """
    if source.party_dims != target.party_dims:
        fail('comparing states of dims {} and {}'.format(
            list(source.party_dims), list(target.party_dims)))
    if source.parties < 2:
        fail('a single-party state has no cut')
    return [p for p in range(source.parties)
            if not nielsen_transformable(source, target, [p], tol)]


def min_pt_eigenvalue(rho: DensityMatrix, dim_left: int, dim_right: int) -> float:
    """!
    Smallest eigenvalue of the partial transpose of rho

    A value below -1e-8 certifies entanglement across the cut.
    """
    if rho.dim != dim_left * dim_right:
        fail('density matrix of dimension {} over a {}x{} cut'.format(rho.dim, dim_left,
                                                                      dim_right))
    return float(linalg.eigenvalues(linalg.partial_transpose(rho.matrix, dim_left, dim_right))[-1])

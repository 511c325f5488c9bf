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
Dense complex matrix primitives

Every matrix in this package is a two dimensional complex numpy array, every spectrum a one
dimensional real array sorted in decreasing order. Nothing here is ever bigger than 81x81, so the
LAPACK drivers behind numpy are used as is.
"""

import logging
from typing import Tuple, cast

import numpy as np
import numpy.typing as npt

from incomm.core.error import fail

ComplexMatrix = npt.NDArray[np.complex128]
ComplexVector = npt.NDArray[np.complex128]
Spectrum = npt.NDArray[np.float64]

## Maximum entrywise |M - M^H| for a matrix to be considered Hermitian, and |U^H U - I| for unitary.
HERMITIAN_TOL: float = 1e-9
## Frobenius residual allowed when rebuilding a matrix from its factorization.
RECONSTRUCTION_TOL: float = 1e-8
## Tolerance used when comparing spectra.
SPECTRUM_TOL: float = 1e-9
## Tolerance on the norm of pure states.
NORM_TOL: float = 1e-10
## Deviation of the norm above which a state accepted within NORM_TOL is still reported.
NORM_WARN_TOL: float = 1e-12


def as_matrix(m: npt.ArrayLike) -> ComplexMatrix:
    res: ComplexMatrix = np.array(m, dtype=np.complex128)
    if res.ndim != 2 or res.shape[0] == 0 or res.shape[1] == 0:
        fail('expected a non-empty matrix, got shape {}'.format(res.shape))
    return res


def as_spectrum(values: npt.ArrayLike) -> Spectrum:
    """! Real values sorted in decreasing order. """
    res: Spectrum = np.sort(np.asarray(values, dtype=np.float64).ravel())[::-1]
    return res


def hermiticity_defect(m: ComplexMatrix) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


def is_hermitian(m: ComplexMatrix, tol: float = HERMITIAN_TOL) -> bool:
    return m.shape[0] == m.shape[1] and hermiticity_defect(m) <= tol


def is_unitary(m: ComplexMatrix, tol: float = HERMITIAN_TOL) -> bool:
    if m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) <= tol)


def hermitian_eigendecomposition(m: npt.ArrayLike) -> Tuple[Spectrum, ComplexMatrix]:
    """!
    Eigenvalues and eigenvectors of a Hermitian matrix

    @param m @b ComplexMatrix Square matrix, Hermitian within @c HERMITIAN_TOL
    @return @b Tuple[Spectrum, ComplexMatrix] Eigenvalues in decreasing order and the unitary whose
        columns are the matching eigenvectors, so that m = V diag(l) V^H
    """
    mat: ComplexMatrix = as_matrix(m)
    if mat.shape[0] != mat.shape[1]:
        fail('eigendecomposition of a non-square {}x{} matrix'.format(*mat.shape))
    defect: float = hermiticity_defect(mat)
    if defect > HERMITIAN_TOL:
        fail('eigendecomposition of a non-Hermitian matrix (max |M - M^H| = {:.3g})'.format(defect))
    # eigh only reads one triangle, symmetrize so both contribute
    values, vectors = np.linalg.eigh((mat + mat.conj().T) / 2)
    order = np.argsort(values, kind='stable')[::-1]
    spectrum: Spectrum = values[order].astype(np.float64)
    basis: ComplexMatrix = vectors[:, order].astype(np.complex128)
    return spectrum, basis


def eigenvalues(m: npt.ArrayLike) -> Spectrum:
    return hermitian_eigendecomposition(m)[0]


def singular_value_decomposition(m: npt.ArrayLike
                                 ) -> Tuple[ComplexMatrix, Spectrum, ComplexMatrix]:
    """!
    Thin singular value decomposition

    @return @b Tuple[ComplexMatrix, Spectrum, ComplexMatrix] (U, s, V) with m = U diag(s) V^H, the
        singular values in decreasing order and U, V with orthonormal columns
    """
    mat: ComplexMatrix = as_matrix(m)
    u, s, vh = np.linalg.svd(mat, full_matrices=False)
    return u.astype(np.complex128), s.astype(np.float64), vh.conj().T.astype(np.complex128)


def kronecker(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    res: ComplexMatrix = cast(ComplexMatrix, np.kron(as_matrix(a), as_matrix(b)))
    return res


def partial_transpose(rho: npt.ArrayLike, dim_left: int, dim_right: int) -> ComplexMatrix:
    """!
    Transpose the right tensor factor of a bipartite operator

    out[(i,k),(j,l)] = rho[(i,l),(j,k)]. Applying it twice gives back the input.
    """
    mat: ComplexMatrix = as_matrix(rho)
    size: int = dim_left * dim_right
    if dim_left < 1 or dim_right < 1 or mat.shape != (size, size):
        fail('partial transpose of a {}x{} matrix over a {}x{} cut'.format(
            mat.shape[0], mat.shape[1], dim_left, dim_right))
    blocks = mat.reshape(dim_left, dim_right, dim_left, dim_right)
    res: ComplexMatrix = blocks.transpose(0, 3, 2, 1).reshape(size, size)
    logging.debug('partial transpose over a %dx%d cut', dim_left, dim_right)
    return res


def reconstruction_residual(m: ComplexMatrix, left: ComplexMatrix, diag: npt.ArrayLike,
                            right: ComplexMatrix) -> float:
    """! Frobenius norm of m - left diag(diag) right^H. """
    rebuilt = (left * np.asarray(diag)) @ right.conj().T
    return float(np.linalg.norm(m - rebuilt))

#pragma once

#include "bipwalk/matrix.hpp"

#include <vector>

namespace bipwalk {

struct EigenSystem {
    std::vector<cx> values;
    Matrix vectors; // column j belongs to values[j]; columns orthonormal
};

// Diagonalizes a Hermitian matrix in place by cyclic complex Jacobi rotations,
// accumulating the rotations into v (which must start as identity or any
// unitary to compose with). Returns the diagonal as real values.
std::vector<double> hermitian_jacobi(Matrix& a, Matrix& v);

// Full eigensystem of a normal matrix m: simultaneous diagonalization of the
// commuting Hermitian parts (m + m^dag)/2 and (m - m^dag)/(2i). Throws
// std::invalid_argument when m is not normal to within normality_tol. Cluster
// resolution between distinct eigenvalues of the Hermitian part is ~1e-8;
// spectra with gaps inside (1e-12, 1e-8) are not expected here.
EigenSystem eigensystem_normal(const Matrix& m, double normality_tol = 1e-9);

// Largest residual |m v_j - lambda_j v_j| over the system's pairs.
double eigen_residual(const Matrix& m, const EigenSystem& es);

// Rotates v by a global phase making its last nonzero entry real positive.
void canonicalize_phase(std::vector<cx>& v, double zero_tol = 1e-9);

} // namespace bipwalk

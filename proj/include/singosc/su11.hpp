#pragma once

#include <Eigen/Dense>

#include "singosc/errors.hpp"
#include "singosc/model.hpp"

namespace singosc {

// Truncated Fock-basis matrices of the su(1,1) generators for a given
// oscillator model.  Only the nonzero structure is stored: J0 is diagonal
// with entries n - j, and the raising operator has a single subdiagonal
// c_n = sqrt((n+1)(n - 2j)) connecting |n> to |n+1>.
struct GeneratorMatrices {
  int dimension;
  Eigen::VectorXd j0_diagonal;     // (n - j) for n = 0..N-1
  Eigen::VectorXd ladder_offdiag;  // c_n for n = 0..N-2
  double weight;                   // the Bargmann index j

  // Dense realizations.  j1 is real symmetric, j2 purely imaginary
  // antisymmetric, j0 real diagonal.
  Eigen::MatrixXd j0() const;
  Eigen::MatrixXd j1() const;
  Eigen::MatrixXcd j2() const;
};

// Largest normalized defect over the commutation relations
//   [J1, J2] = -i J0,   [J2, J0] = i J1,   [J0, J1] = i J2
// and the Casimir combination J0^2 - J1^2 - J2^2 = j(j+1) I.  Products of
// truncated matrices are only faithful away from the truncation edge, so
// each defect is measured on the leading (N-1) x (N-1) block.  Commutator
// defects are scaled by the largest element of either side; the Casimir
// defect, whose O(N^2) squares cancel to an O(1) result, is scaled by the
// largest element of the squares themselves.
struct AlgebraReport {
  double commutator_defect;  // worst of the three commutators
  double casimir_defect;
};

// Builds the truncated generators.  Requires dimension >= 2 so that at
// least one ladder element exists.
GeneratorMatrices build_generators(const OscillatorModel& model,
                                   int dimension);

// Hamiltonian at frequency omega in the reference (omega = 1) Fock basis:
//   H(omega) = (omega^2 + 1) J0 + (omega^2 - 1) J2,
// a complex Hermitian tridiagonal matrix with spectrum 2*omega*(n - j).
// Throws RangeError unless omega > 0.
Eigen::MatrixXcd hamiltonian_matrix(const GeneratorMatrices& gen,
                                    double omega);

AlgebraReport check_algebra(const GeneratorMatrices& gen);

}  // namespace singosc

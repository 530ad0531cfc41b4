#include "singosc/su11.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace singosc {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}  // namespace

Eigen::MatrixXd GeneratorMatrices::j0() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dimension, dimension);
  m.diagonal() = j0_diagonal;
  return m;
}

Eigen::MatrixXd GeneratorMatrices::j1() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dimension, dimension);
  for (int n = 0; n + 1 < dimension; ++n) {
    const double half_c = 0.5 * ladder_offdiag(n);
    m(n + 1, n) = half_c;
    m(n, n + 1) = half_c;
  }
  return m;
}

Eigen::MatrixXcd GeneratorMatrices::j2() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension, dimension);
  for (int n = 0; n + 1 < dimension; ++n) {
    const double half_c = 0.5 * ladder_offdiag(n);
    m(n + 1, n) = -kI * half_c;
    m(n, n + 1) = kI * half_c;
  }
  return m;
}

GeneratorMatrices build_generators(const OscillatorModel& model,
                                   int dimension) {
  if (dimension < 2) {
    throw RangeError("build_generators: dimension must be >= 2, got " +
                     std::to_string(dimension));
  }
  GeneratorMatrices gen;
  gen.dimension = dimension;
  gen.weight = model.weight;
  gen.j0_diagonal.resize(dimension);
  gen.ladder_offdiag.resize(dimension - 1);
  const double minus_two_j = model.minus_two_j();
  for (int n = 0; n < dimension; ++n) {
    gen.j0_diagonal(n) = static_cast<double>(n) - model.weight;
  }
  for (int n = 0; n + 1 < dimension; ++n) {
    const double nn = static_cast<double>(n);
    gen.ladder_offdiag(n) = std::sqrt((nn + 1.0) * (nn + minus_two_j));
  }
  return gen;
}

Eigen::MatrixXcd hamiltonian_matrix(const GeneratorMatrices& gen,
                                    double omega) {
  if (!(omega > 0.0)) {
    throw RangeError("hamiltonian_matrix: omega must be positive, got " +
                     std::to_string(omega));
  }
  const double w2 = omega * omega;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(gen.dimension, gen.dimension);
  for (int n = 0; n < gen.dimension; ++n) {
    h(n, n) = (w2 + 1.0) * gen.j0_diagonal(n);
  }
  for (int n = 0; n + 1 < gen.dimension; ++n) {
    const std::complex<double> off = (w2 - 1.0) * (-kI) * 0.5 *
                                     gen.ladder_offdiag(n);
    h(n + 1, n) = off;
    h(n, n + 1) = std::conj(off);
  }
  return h;
}

namespace {

// Normalized maximum defect of (lhs - rhs) restricted to the leading
// block x block corner, scaled by the largest magnitude in either side.
double block_defect(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs,
                    int block) {
  const auto l = lhs.topLeftCorner(block, block);
  const auto r = rhs.topLeftCorner(block, block);
  const double scale =
      std::max({l.cwiseAbs().maxCoeff(), r.cwiseAbs().maxCoeff(), 1.0});
  return (l - r).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

AlgebraReport check_algebra(const GeneratorMatrices& gen) {
  const Eigen::MatrixXcd m0 = gen.j0().cast<std::complex<double>>();
  const Eigen::MatrixXcd m1 = gen.j1().cast<std::complex<double>>();
  const Eigen::MatrixXcd m2 = gen.j2();
  const int block = gen.dimension - 1;

  AlgebraReport report{0.0, 0.0};
  const double d12 = block_defect(m1 * m2 - m2 * m1, -kI * m0, block);
  const double d20 = block_defect(m2 * m0 - m0 * m2, kI * m1, block);
  const double d01 = block_defect(m0 * m1 - m1 * m0, kI * m2, block);
  report.commutator_defect = std::max({d12, d20, d01});

  // The Casimir combination cancels the O(N^2) squares down to an O(1)
  // multiple of the identity, so its defect is measured relative to the
  // magnitude of the products actually formed: anything tighter would
  // demand more accuracy than the arithmetic carries.
  const Eigen::MatrixXcd sq0 = m0 * m0;
  const Eigen::MatrixXcd sq1 = m1 * m1;
  const Eigen::MatrixXcd sq2 = m2 * m2;
  const double product_scale =
      std::max({sq0.topLeftCorner(block, block).cwiseAbs().maxCoeff(),
                sq1.topLeftCorner(block, block).cwiseAbs().maxCoeff(),
                sq2.topLeftCorner(block, block).cwiseAbs().maxCoeff(), 1.0});
  const double casimir = gen.weight * (gen.weight + 1.0);
  const Eigen::MatrixXcd lhs = sq0 - sq1 - sq2;
  const Eigen::MatrixXcd target =
      casimir * Eigen::MatrixXcd::Identity(gen.dimension, gen.dimension);
  report.casimir_defect = (lhs.topLeftCorner(block, block) -
                           target.topLeftCorner(block, block))
                              .cwiseAbs()
                              .maxCoeff() /
                          product_scale;
  return report;
}

}  // namespace singosc

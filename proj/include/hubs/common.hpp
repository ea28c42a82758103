#ifndef HUBS_COMMON_HPP
#define HUBS_COMMON_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hubs {

using Index = Eigen::Index;

// Matrices are dense row-major doubles: detectors consume rows as
// contiguous spans, and the on-disk format is row-major.
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<double>;
using Vector = VectorX<double>;

// Invalid sizes, inconsistent arguments, malformed configs.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameters outside the regime an operation is defined for
// (e.g. sigma1 <= sigma0 for the amplifier, divergent integrals).
class RegimeError : public std::domain_error {
 public:
  explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

// Numerical failure: quadrature non-convergence, overflow guards.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A statistical-query oracle that cannot be simulated within its
// tolerance budget.
class OracleError : public std::runtime_error {
 public:
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hubs

#endif  // HUBS_COMMON_HPP

#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace eitqc {

using Real = double;
using Complex = std::complex<Real>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXr = VectorX<Real>;
using VectorXc = VectorX<Complex>;
using MatrixXc = MatrixX<Complex>;
using MatrixXr = MatrixX<Real>;

/// Invalid physical parameters or out-of-domain arguments.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A modelling precondition (validity regime, feasibility) does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One inequality of a validity diagnostic.  `margin` is rhs/lhs for
/// "lhs << rhs" style checks, so larger is safer.
struct Check {
  std::string name;
  Real lhs = 0;
  Real rhs = 0;
  Real margin = 0;
  bool pass = false;
};

struct Diagnostics {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check& find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::out_of_range("no check named " + name);
  }
};

/// Builds a "lhs << rhs" check: passes when rhs >= factor * lhs and rhs > 0.
inline Check much_less(std::string name, Real lhs, Real rhs, Real factor = 10.0) {
  Check c{std::move(name), lhs, rhs, 0.0, false};
  c.margin = lhs > 0 ? rhs / lhs : (rhs > 0 ? std::numeric_limits<Real>::infinity() : 0.0);
  c.pass = rhs > 0 && rhs >= factor * lhs;
  return c;
}

/// "lhs < rhs" check with margin rhs/lhs.
inline Check less(std::string name, Real lhs, Real rhs) {
  Check c{std::move(name), lhs, rhs, 0.0, false};
  c.margin = lhs > 0 ? rhs / lhs : std::numeric_limits<Real>::infinity();
  c.pass = lhs < rhs;
  return c;
}

}  // namespace eitqc

#pragma once

#include <stdexcept>
#include <string>

namespace bvlift {

/// Adaptive quadrature exhausted its subdivision budget before meeting
/// the requested tolerance.
struct quadrature_failure : std::runtime_error {
  explicit quadrature_failure(const std::string& what) : std::runtime_error(what) {}
};

/// The probed limit of f(x',y',tA')/t failed to contract, or a recession
/// evaluator was required but not available.
struct no_recession : std::runtime_error {
  explicit no_recession(const std::string& what) : std::runtime_error(what) {}
};

/// compose() was called on a function carrying Cantor components.
struct unsupported_cantor_composition : std::runtime_error {
  explicit unsupported_cantor_composition(const std::string& what)
      : std::runtime_error(what) {}
};

/// An operation requiring positive 1-homogeneity in the gradient slot was
/// handed an integrand that is not.
struct not_homogeneous : std::runtime_error {
  explicit not_homogeneous(const std::string& what) : std::runtime_error(what) {}
};

/// A test function's support touches or leaves the domain.
struct support_violation : std::runtime_error {
  explicit support_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bvlift

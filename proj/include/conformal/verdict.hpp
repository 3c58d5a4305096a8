#pragma once

// Results of identity checks.

#include <stdexcept>
#include <string>
#include <vector>

#include "conformal/tensor.hpp"

namespace conformal {

/// One failing instance of an identity: lhs - rhs != 0 at the given basis
/// indices, in the given output component.
struct Counterexample {
  std::string identity;
  std::vector<std::string> indices;
  std::vector<std::string> component;
  Poly residual;
};

class Verdict {
 public:
  bool pass() const { return counterexamples_.empty(); }
  const std::vector<Counterexample>& counterexamples() const {
    return counterexamples_;
  }

  void add(Counterexample c) { counterexamples_.push_back(std::move(c)); }
  void merge(const Verdict& other);

  /// Records every nonzero component of lhs - rhs.
  void expect_equal(const std::string& identity,
                    const std::vector<std::string>& indices, const Element& lhs,
                    const Element& rhs, const FreeModule& module);
  void expect_equal(const std::string& identity,
                    const std::vector<std::string>& indices,
                    const TensorElement& lhs, const TensorElement& rhs,
                    const std::vector<const FreeModule*>& legs);
  void expect_zero(const std::string& identity,
                   const std::vector<std::string>& indices,
                   const std::vector<std::string>& component,
                   const Poly& residual);

 private:
  std::vector<Counterexample> counterexamples_;
};

/// A verdict split into named parts (e.g. symmetric / invariant / ...).
class Report {
 public:
  void add(std::string name, Verdict v) {
    parts_.emplace_back(std::move(name), std::move(v));
  }
  bool pass() const;
  const Verdict& at(const std::string& name) const;
  bool has(const std::string& name) const;
  const std::vector<std::pair<std::string, Verdict>>& parts() const {
    return parts_;
  }
  /// All counterexamples of all parts, in part order.
  Verdict combined() const;

 private:
  std::vector<std::pair<std::string, Verdict>> parts_;
};

/// A construction or check whose precondition failed.
class Refusal : public std::runtime_error {
 public:
  Refusal(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Throws Refusal unless `report` passes.
void require(const std::string& what, const Report& report);
void require(const std::string& what, const std::string& part,
             const Verdict& verdict);

}  // namespace conformal

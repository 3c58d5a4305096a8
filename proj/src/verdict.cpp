#include "conformal/verdict.hpp"

#include <algorithm>

namespace conformal {

void Verdict::merge(const Verdict& other) {
  counterexamples_.insert(counterexamples_.end(),
                          other.counterexamples_.begin(),
                          other.counterexamples_.end());
}

void Verdict::expect_equal(const std::string& identity,
                           const std::vector<std::string>& indices,
                           const Element& lhs, const Element& rhs,
                           const FreeModule& module) {
  if (lhs.rank() != rhs.rank() || lhs.rank() != module.rank()) {
    throw std::logic_error("expect_equal: rank mismatch");
  }
  for (std::size_t k = 0; k < lhs.rank(); ++k) {
    expect_zero(identity, indices, {module.label(k)}, lhs[k] - rhs[k]);
  }
}

void Verdict::expect_equal(const std::string& identity,
                           const std::vector<std::string>& indices,
                           const TensorElement& lhs, const TensorElement& rhs,
                           const std::vector<const FreeModule*>& legs) {
  TensorElement diff = lhs - rhs;
  if (legs.size() != diff.legs()) {
    throw std::logic_error("expect_equal: leg count mismatch");
  }
  for (const auto& [idx, c] : diff.terms()) {
    std::vector<std::string> component;
    for (std::size_t l = 0; l < idx.size(); ++l) {
      component.push_back(legs[l]->label(idx[l]));
    }
    expect_zero(identity, indices, component, c);
  }
}

void Verdict::expect_zero(const std::string& identity,
                          const std::vector<std::string>& indices,
                          const std::vector<std::string>& component,
                          const Poly& residual) {
  if (!residual.is_zero()) add({identity, indices, component, residual});
}

bool Report::pass() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](const auto& p) { return p.second.pass(); });
}

bool Report::has(const std::string& name) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const auto& p) { return p.first == name; });
}

const Verdict& Report::at(const std::string& name) const {
  for (const auto& [n, v] : parts_) {
    if (n == name) return v;
  }
  throw std::out_of_range("no report part '" + name + "'");
}

Verdict Report::combined() const {
  Verdict all;
  for (const auto& [n, v] : parts_) all.merge(v);
  return all;
}

void require(const std::string& what, const Report& report) {
  if (!report.pass()) throw Refusal(what, report);
}

void require(const std::string& what, const std::string& part,
             const Verdict& verdict) {
  Report r;
  r.add(part, verdict);
  require(what, r);
}

}  // namespace conformal

#include "conformal/module.hpp"

#include <algorithm>
#include <set>

namespace conformal {

FreeModule::FreeModule(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty basis label");
    if (l.find(',') != std::string::npos) {
      throw InputError("basis label '" + l + "' contains ','");
    }
    if (!seen.insert(l).second) {
      throw InputError("duplicate basis label '" + l + "'");
    }
  }
}

FreeModule FreeModule::numbered(std::size_t n, const std::string& stem) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(stem + std::to_string(i));
  return FreeModule(std::move(labels));
}

std::size_t FreeModule::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool FreeModule::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::string dual_label(const std::string& label) {
  if (!label.empty() && label.back() == '*') {
    return label.substr(0, label.size() - 1);
  }
  return label + "*";
}

FreeModule FreeModule::dual() const {
  std::vector<std::string> labels;
  for (const auto& l : labels_) labels.push_back(dual_label(l));
  return FreeModule(std::move(labels));
}

FreeModule FreeModule::direct_sum(const FreeModule& other) const {
  std::vector<std::string> labels = labels_;
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return FreeModule(std::move(labels));
}

Element Element::basis(std::size_t rank, std::size_t i, const Poly& coeff) {
  Element e(rank);
  e[i] = coeff;
  return e;
}

bool Element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

Element& Element::operator+=(const Element& o) {
  if (o.rank() != rank()) throw std::logic_error("element rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.rank() != rank()) throw std::logic_error("element rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Element Element::scaled(const Poly& p) const {
  Element r = *this;
  for (auto& c : r.coeffs_) c *= p;
  return r;
}

Element Element::substitute(const Substitution& s) const {
  Element r = *this;
  for (auto& c : r.coeffs_) c = c.substitute(s);
  return r;
}

ActionTable::ActionTable(std::size_t labels, std::size_t inputs,
                         std::size_t outputs)
    : labels_(labels),
      inputs_(inputs),
      outputs_(outputs),
      entries_(labels * inputs * outputs) {}

std::size_t ActionTable::index(std::size_t l, std::size_t i,
                               std::size_t o) const {
  if (l >= labels_ || i >= inputs_ || o >= outputs_) {
    throw std::out_of_range("action table index");
  }
  return (l * inputs_ + i) * outputs_ + o;
}

const Poly& ActionTable::at(std::size_t l, std::size_t i, std::size_t o) const {
  return entries_[index(l, i, o)];
}

Poly& ActionTable::at(std::size_t l, std::size_t i, std::size_t o) {
  return entries_[index(l, i, o)];
}

bool ActionTable::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

ActionTable ActionTable::substitute(const Substitution& s) const {
  ActionTable r = *this;
  for (auto& e : r.entries_) e = e.substitute(s);
  return r;
}

VarSet ActionTable::variables() const {
  VarSet s;
  for (const auto& e : entries_) s |= e.variables();
  return s;
}

Poly kernel_at(const ActionTable& table, std::size_t l, std::size_t i,
               std::size_t o, Var param, Var slot) {
  const Poly& k = table.at(l, i, o);
  if (k.is_zero()) return k;
  return k.substitute({{var::L, Poly::variable(param)},
                       {var::D, Poly::variable(slot)}});
}

Element act(const ActionTable& table, const Element& label,
            const Element& input, const Poly& pi) {
  if (label.rank() != table.labels() || input.rank() != table.inputs()) {
    throw std::logic_error("act: operand rank does not match action table");
  }
  const Poly s = Poly::variable(var::Scratch);
  const Poly d = Poly::variable(var::D);
  Element out(table.outputs());
  for (std::size_t i = 0; i < table.labels(); ++i) {
    if (label[i].is_zero()) continue;
    Poly li = label[i].substitute({{var::D, -s}});
    for (std::size_t j = 0; j < table.inputs(); ++j) {
      if (input[j].is_zero()) continue;
      Poly lv = li * input[j].substitute({{var::D, s + d}});
      for (std::size_t m = 0; m < table.outputs(); ++m) {
        if (table.at(i, j, m).is_zero()) continue;
        out[m] += lv * kernel_at(table, i, j, m, var::Scratch, var::D);
      }
    }
  }
  return out.substitute({{var::Scratch, pi}});
}

Element act_basis(const ActionTable& table, std::size_t label,
                  std::size_t input, const Poly& pi) {
  return act(table, Element::basis(table.labels(), label),
             Element::basis(table.inputs(), input), pi);
}

ModuleMap::ModuleMap(std::size_t source_rank, std::size_t target_rank)
    : rows_(source_rank), cols_(target_rank), entries_(rows_ * cols_) {}

ModuleMap ModuleMap::identity(std::size_t n) {
  ModuleMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly(1);
  return m;
}

const Poly& ModuleMap::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("module map index");
  return entries_[i * cols_ + j];
}

Poly& ModuleMap::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("module map index");
  return entries_[i * cols_ + j];
}

Element ModuleMap::row(std::size_t i) const {
  Element e(cols_);
  for (std::size_t j = 0; j < cols_; ++j) e[j] = at(i, j);
  return e;
}

Element ModuleMap::apply(const Element& v) const {
  if (v.rank() != rows_) throw std::logic_error("module map rank mismatch");
  Element out(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero()) out[j] += v[i] * at(i, j);
    }
  }
  return out;
}

ModuleMap ModuleMap::then(const ModuleMap& next) const {
  if (cols_ != next.rows_) throw std::logic_error("module map composition");
  ModuleMap r(rows_, next.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Element img = next.apply(row(i));
    for (std::size_t j = 0; j < next.cols_; ++j) r.at(i, j) = img[j];
  }
  return r;
}

bool ModuleMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

Poly determinant(std::span<const Poly> m, std::size_t n) {
  if (n == 0) return Poly(1);
  if (n == 1) return m[0];
  // Laplace expansion along the first row; ranks here are small.
  Poly det;
  std::vector<Poly> minor((n - 1) * (n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    if (m[col].is_zero()) continue;
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t mc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor[(r - 1) * (n - 1) + mc++] = m[r * n + c];
      }
    }
    Poly term = m[col] * determinant(minor, n - 1);
    if (col % 2) {
      det -= term;
    } else {
      det += term;
    }
  }
  return det;
}

Poly ModuleMap::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square map");
  return conformal::determinant(entries_, rows_);
}

bool ModuleMap::is_invertible() const {
  if (rows_ != cols_) return false;
  Poly det = determinant();
  return det.is_constant() && !det.is_zero();
}

ModuleMap ModuleMap::inverse() const {
  if (!is_invertible()) {
    throw InputError("module map is not invertible over Q[D]");
  }
  const std::size_t n = rows_;
  Rational inv_det = 1 / determinant().constant_term();
  ModuleMap inv(n, n);
  std::vector<Poly> minor((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_ij goes to inv(j, i)
      std::size_t k = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[k++] = at(r, c);
        }
      }
      Poly cof = conformal::determinant(minor, n - 1);
      if ((i + j) % 2) cof = -cof;
      inv.at(j, i) = Poly(inv_det) * cof;
    }
  }
  return inv;
}

ConformalLinearMap::ConformalLinearMap(std::size_t source_rank,
                                       std::size_t target_rank)
    : rows_(source_rank), cols_(target_rank), entries_(rows_ * cols_) {}

const Poly& ConformalLinearMap::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("linear map index");
  return entries_[i * cols_ + j];
}

Poly& ConformalLinearMap::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("linear map index");
  return entries_[i * cols_ + j];
}

ModuleMap ConformalLinearMap::at_zero() const {
  ModuleMap m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m.at(i, j) = at(i, j).substitute({{var::L, Poly(0)}});
    }
  }
  return m;
}

ConformalLinearMap ConformalLinearMap::from_module_map(const ModuleMap& m) {
  ConformalLinearMap t(m.source_rank(), m.target_rank());
  for (std::size_t i = 0; i < m.source_rank(); ++i) {
    for (std::size_t j = 0; j < m.target_rank(); ++j) t.at(i, j) = m.at(i, j);
  }
  return t;
}

}  // namespace conformal

#include "conformal/tensor.hpp"

namespace conformal {

namespace {

Poly slot(std::size_t k) { return Poly::variable(var::x(k)); }

void check_slots(std::size_t legs) {
  if (legs > var::kMaxSlots) {
    throw std::logic_error("tensor exceeds the number of slot variables");
  }
}

}  // namespace

TensorElement::TensorElement(std::vector<std::size_t> ranks)
    : ranks_(std::move(ranks)) {
  check_slots(ranks_.size());
}

TensorElement TensorElement::basis(std::vector<std::size_t> ranks,
                                   MultiIndex index, const Poly& coeff) {
  TensorElement t(std::move(ranks));
  t.add(index, coeff);
  return t;
}

void TensorElement::check_index(const MultiIndex& index) const {
  if (index.size() != ranks_.size()) {
    throw std::logic_error("multi-index length does not match leg count");
  }
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= ranks_[i]) throw std::out_of_range("multi-index");
  }
}

Poly TensorElement::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Poly() : it->second;
}

void TensorElement::add(const MultiIndex& index, const Poly& c) {
  if (c.is_zero()) return;
  check_index(index);
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.ranks_ != ranks_) throw std::logic_error("tensor shape mismatch");
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (o.ranks_ != ranks_) throw std::logic_error("tensor shape mismatch");
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [i, c] : r.terms_) c = -c;
  return r;
}

TensorElement TensorElement::scaled(const Poly& p) const {
  TensorElement r(ranks_);
  for (const auto& [i, c] : terms_) r.add(i, c * p);
  return r;
}

TensorElement TensorElement::substitute(const Substitution& s) const {
  TensorElement r(ranks_);
  for (const auto& [i, c] : terms_) r.add(i, c.substitute(s));
  return r;
}

TensorElement leg_product(const TensorElement& t, std::size_t s, std::size_t u,
                          std::size_t pos, const ActionTable& table,
                          const Poly& pi) {
  const std::size_t k = t.legs();
  if (s == u || s < 1 || u < 1 || s > k || u > k || pos < 1 || pos > k - 1) {
    throw std::invalid_argument("leg_product: invalid legs");
  }
  if (t.ranks()[s - 1] != table.labels() || t.ranks()[u - 1] != table.inputs() ||
      table.labels() != table.inputs() || table.inputs() != table.outputs()) {
    throw std::invalid_argument("leg_product: legs do not match the table");
  }

  // old leg -> new leg for the untouched legs
  std::vector<std::size_t> new_pos(k + 1, 0);
  std::vector<std::size_t> ranks;
  std::size_t next = 1;
  for (std::size_t leg = 1; leg <= k; ++leg) {
    if (leg == s || leg == u) continue;
    if (next == pos) ++next;
    new_pos[leg] = next++;
  }
  ranks.resize(k - 1);
  for (std::size_t leg = 1; leg <= k; ++leg) {
    if (new_pos[leg]) ranks[new_pos[leg] - 1] = t.ranks()[leg - 1];
  }
  ranks[pos - 1] = table.outputs();

  const Poly sc = Poly::variable(var::Scratch);
  Substitution rename;
  for (std::size_t leg = 1; leg <= k; ++leg) {
    if (new_pos[leg]) rename.emplace(var::x(leg), slot(new_pos[leg]));
  }
  rename.emplace(var::x(s), -sc);
  rename.emplace(var::x(u), sc + slot(pos));

  TensorElement out(ranks);
  for (const auto& [idx, c] : t.terms()) {
    Poly moved = c.substitute(rename);
    MultiIndex ni(k - 1);
    for (std::size_t leg = 1; leg <= k; ++leg) {
      if (new_pos[leg]) ni[new_pos[leg] - 1] = idx[leg - 1];
    }
    for (std::size_t m = 0; m < table.outputs(); ++m) {
      if (table.at(idx[s - 1], idx[u - 1], m).is_zero()) continue;
      ni[pos - 1] = m;
      out.add(ni, moved * kernel_at(table, idx[s - 1], idx[u - 1], m,
                                    var::Scratch, var::x(pos)));
    }
  }
  return out.substitute({{var::Scratch, pi}});
}

TensorElement leg_action(const TensorElement& t, std::size_t leg,
                         const ActionTable& table, const Element& label,
                         const Poly& pi) {
  if (leg < 1 || leg > t.legs()) throw std::invalid_argument("leg_action: leg");
  if (t.ranks()[leg - 1] != table.inputs() || label.rank() != table.labels()) {
    throw std::invalid_argument("leg_action: module mismatch");
  }
  std::vector<std::size_t> ranks = t.ranks();
  ranks[leg - 1] = table.outputs();

  const Poly sc = Poly::variable(var::Scratch);
  const Poly x = slot(leg);
  std::vector<Poly> label_coeffs(label.rank());
  for (std::size_t i = 0; i < label.rank(); ++i) {
    label_coeffs[i] = label[i].substitute({{var::D, -sc}});
  }

  TensorElement out(ranks);
  for (const auto& [idx, c] : t.terms()) {
    Poly moved = c.substitute({{var::x(leg), sc + x}});
    MultiIndex ni = idx;
    for (std::size_t i = 0; i < label.rank(); ++i) {
      if (label_coeffs[i].is_zero()) continue;
      Poly lc = label_coeffs[i] * moved;
      for (std::size_t m = 0; m < table.outputs(); ++m) {
        if (table.at(i, idx[leg - 1], m).is_zero()) continue;
        ni[leg - 1] = m;
        out.add(ni, lc * kernel_at(table, i, idx[leg - 1], m, var::Scratch,
                                   var::x(leg)));
      }
    }
  }
  return out.substitute({{var::Scratch, pi}});
}

TensorElement dual_pairing(const TensorElement& t, std::size_t leg,
                           std::size_t functional, const Poly& pi) {
  if (leg < 1 || leg > t.legs()) throw std::invalid_argument("dual_pairing: leg");
  if (functional >= t.ranks()[leg - 1]) {
    throw std::invalid_argument("dual_pairing: module mismatch");
  }
  const std::size_t k = t.legs();
  std::vector<std::size_t> ranks = t.ranks();
  ranks.erase(ranks.begin() + static_cast<long>(leg - 1));
  const Poly sc = Poly::variable(var::Scratch);
  Substitution s{{var::x(leg), sc}};
  for (std::size_t l = leg + 1; l <= k; ++l) s.emplace(var::x(l), slot(l - 1));

  TensorElement out(ranks);
  for (const auto& [idx, c] : t.terms()) {
    if (idx[leg - 1] != functional) continue;
    MultiIndex ni = idx;
    ni.erase(ni.begin() + static_cast<long>(leg - 1));
    out.add(ni, c.substitute(s));
  }
  return out.substitute({{var::Scratch, pi}});
}

TensorElement substitute_param(const TensorElement& t, Var param,
                               const Poly& image) {
  if (is_slot(param) || param == var::D) {
    throw std::invalid_argument("substitute_param: not a free parameter");
  }
  return t.substitute({{param, image}});
}

TensorElement swap_legs(const TensorElement& t, std::size_t s, std::size_t u) {
  if (s < 1 || u < 1 || s > t.legs() || u > t.legs()) {
    throw std::invalid_argument("swap_legs: leg");
  }
  if (s == u) return t;
  std::vector<std::size_t> ranks = t.ranks();
  std::swap(ranks[s - 1], ranks[u - 1]);
  Substitution swap{{var::x(s), slot(u)}, {var::x(u), slot(s)}};
  TensorElement out(ranks);
  for (const auto& [idx, c] : t.terms()) {
    MultiIndex ni = idx;
    std::swap(ni[s - 1], ni[u - 1]);
    out.add(ni, c.substitute(swap));
  }
  return out;
}

TensorElement tensor_product(const TensorElement& t, const TensorElement& w) {
  std::vector<std::size_t> ranks = t.ranks();
  ranks.insert(ranks.end(), w.ranks().begin(), w.ranks().end());
  TensorElement out(ranks);
  Substitution shift;
  for (std::size_t l = 1; l <= w.legs(); ++l) {
    shift.emplace(var::x(l), slot(l + t.legs()));
  }
  for (const auto& [wi, wc] : w.terms()) {
    Poly shifted = wc.substitute(shift);
    for (const auto& [ti, tc] : t.terms()) {
      MultiIndex ni = ti;
      ni.insert(ni.end(), wi.begin(), wi.end());
      out.add(ni, tc * shifted);
    }
  }
  return out;
}

TensorElement split_leg(const TensorElement& t, std::size_t leg,
                        const std::vector<TensorElement>& images) {
  if (leg < 1 || leg > t.legs()) throw std::invalid_argument("split_leg: leg");
  if (images.size() != t.ranks()[leg - 1] || images.empty()) {
    throw std::invalid_argument("split_leg: image count");
  }
  const std::size_t k = t.legs();
  const std::size_t w = images.front().legs();
  std::vector<std::size_t> ranks;
  for (std::size_t l = 1; l < leg; ++l) ranks.push_back(t.ranks()[l - 1]);
  for (const auto& r : images.front().ranks()) ranks.push_back(r);
  for (std::size_t l = leg + 1; l <= k; ++l) ranks.push_back(t.ranks()[l - 1]);

  Substitution outer;
  Poly inner_sum;
  for (std::size_t j = 0; j < w; ++j) inner_sum += slot(leg + j);
  outer.emplace(var::x(leg), inner_sum);
  for (std::size_t l = leg + 1; l <= k; ++l) {
    outer.emplace(var::x(l), slot(l + w - 1));
  }
  Substitution inner;
  for (std::size_t j = 1; j <= w; ++j) inner.emplace(var::x(j), slot(leg + j - 1));

  std::vector<TensorElement> shifted;
  for (const auto& img : images) {
    if (img.ranks() != images.front().ranks()) {
      throw std::invalid_argument("split_leg: inconsistent image shapes");
    }
    shifted.push_back(img.substitute(inner));
  }

  TensorElement out(ranks);
  for (const auto& [idx, c] : t.terms()) {
    Poly moved = c.substitute(outer);
    for (const auto& [ii, ic] : shifted[idx[leg - 1]].terms()) {
      MultiIndex ni(idx.begin(), idx.begin() + static_cast<long>(leg - 1));
      ni.insert(ni.end(), ii.begin(), ii.end());
      ni.insert(ni.end(), idx.begin() + static_cast<long>(leg), idx.end());
      out.add(ni, moved * ic);
    }
  }
  return out;
}

TensorElement map_leg(const TensorElement& t, std::size_t leg,
                      const ModuleMap& phi) {
  if (leg < 1 || leg > t.legs()) throw std::invalid_argument("map_leg: leg");
  if (phi.source_rank() != t.ranks()[leg - 1]) {
    throw std::invalid_argument("map_leg: rank mismatch");
  }
  std::vector<std::size_t> ranks = t.ranks();
  ranks[leg - 1] = phi.target_rank();
  Substitution to_slot{{var::D, slot(leg)}};
  TensorElement out(ranks);
  for (const auto& [idx, c] : t.terms()) {
    MultiIndex ni = idx;
    for (std::size_t j = 0; j < phi.target_rank(); ++j) {
      const Poly& m = phi.at(idx[leg - 1], j);
      if (m.is_zero()) continue;
      ni[leg - 1] = j;
      out.add(ni, c * m.substitute(to_slot));
    }
  }
  return out;
}

TensorElement push_element(const Element& v,
                           const std::vector<TensorElement>& images) {
  if (images.size() != v.rank() || images.empty()) {
    throw std::invalid_argument("push_element: image count");
  }
  TensorElement out(images.front().ranks());
  Poly total = slot_sum(images.front().legs());
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (v[i].is_zero()) continue;
    out += images[i].scaled(v[i].substitute({{var::D, total}}));
  }
  return out;
}

}  // namespace conformal

#include "conformal/poly.hpp"

#include <sstream>

namespace conformal {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "L", "M", "N", "L1", "L2", "L3", "D", "x1",
    "x2", "x3", "x4", "x5", "x6", "_s", "_t", "_u"};

}  // namespace

std::string_view var_name(Var v) { return kNames.at(v.id()); }

std::optional<Var> var_from_name(std::string_view name) {
  // scratch variables are not addressable by name
  for (std::uint8_t i = 0; i < var::Scratch.id(); ++i) {
    if (kNames[i] == name) return Var{i};
  }
  return std::nullopt;
}

bool is_slot(Var v) {
  return v.id() >= var::x(1).id() && v.id() <= var::x(var::kMaxSlots).id();
}

std::size_t slot_index(Var v) {
  if (!is_slot(v)) throw std::invalid_argument("not a slot variable");
  return v.id() - var::x(1).id() + 1;
}

VarSet var_set(std::initializer_list<Var> vars) {
  VarSet s;
  for (Var v : vars) s.set(v.id());
  return s;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

Poly::Poly(long c) : Poly(Rational(c)) {}

// mpq_class(num, den) is not reduced; arithmetic and equality assume it is.
Poly::Poly(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  if (r != 0) terms_.emplace(Monomial{}, r);
}

Poly Poly::variable(Var v) {
  Monomial m;
  m.exp[v.id()] = 1;
  return monomial(m, 1);
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Rational r = c;
  r.canonicalize();
  Poly p;
  p.add_term(m, r);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

VarSet Poly::variables() const {
  VarSet s;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (m.exp[i]) s.set(i);
    }
  }
  return s;
}

unsigned Poly::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned Poly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exp[v.id()]);
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  Monomial m;
  Rational c;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < kVarCount; ++i) {
        unsigned e = unsigned(ma.exp[i]) + mb.exp[i];
        if (e > 0xffff) throw std::overflow_error("monomial exponent overflow");
        m.exp[i] = static_cast<std::uint16_t>(e);
      }
      c = ca * cb;
      r.add_term(m, c);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::substitute(const Substitution& s) const {
  if (s.empty() || terms_.empty()) return *this;
  // cache powers of each image
  std::map<std::pair<std::uint8_t, unsigned>, Poly> powers;
  auto power_of = [&](Var v, unsigned e) -> const Poly& {
    auto key = std::make_pair(v.id(), e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, s.at(v).pow(e)).first->second;
  };

  Poly result;
  for (const auto& [m, c] : terms_) {
    Monomial kept = m;
    Poly factor(c);
    for (const auto& [v, image] : s) {
      unsigned e = m.exp[v.id()];
      if (e == 0) continue;
      kept.exp[v.id()] = 0;
      factor *= power_of(v, e);
      if (factor.is_zero()) break;
    }
    if (factor.is_zero()) continue;
    result += factor * Poly::monomial(kept, 1);
  }
  return result;
}

std::map<unsigned, Poly> Poly::homogeneous_components() const {
  std::map<unsigned, Poly> parts;
  for (const auto& [m, c] : terms_) parts[m.degree()].add_term(m, c);
  return parts;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = m.degree() == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (!m.exp[i]) continue;
      if (wrote) out << "*";
      out << kNames[i];
      if (m.exp[i] > 1) out << "^" << m.exp[i];
      wrote = true;
    }
  }
  return out.str();
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment) {
  Substitution s;
  for (const auto& [name, image] : assignment) {
    auto v = var_from_name(name);
    if (!v) throw std::invalid_argument("unknown variable '" + name + "'");
    s.emplace(*v, image);
  }
  return p.substitute(s);
}

Poly restrict_to_hyperplane(const Poly& p, const std::vector<Var>& vars) {
  if (vars.empty()) throw std::invalid_argument("empty variable list");
  Poly minus_rest;
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    minus_rest -= Poly::variable(vars[i]);
  }
  return p.substitute({{vars.back(), minus_rest}});
}

bool vanishes_on_hyperplane(const Poly& p, const std::vector<Var>& vars) {
  return restrict_to_hyperplane(p, vars).is_zero();
}

Poly slot_sum(std::size_t k) {
  Poly s;
  for (std::size_t i = 1; i <= k; ++i) s += Poly::variable(var::x(i));
  return s;
}

}  // namespace conformal

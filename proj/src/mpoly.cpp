#include "mumford/mpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mumford {

VarTable make_var_table(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarTable phase_vars(int g) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(3 * g + 1));
  for (int k = 0; k < g; ++k) names.push_back("u_" + std::to_string(k));
  for (int k = 0; k < g; ++k) names.push_back("v_" + std::to_string(k));
  for (int k = 0; k <= g; ++k) names.push_back("w_" + std::to_string(k));
  return make_var_table(std::move(names));
}

int u_index(int /*g*/, int k) { return k; }
int v_index(int g, int k) { return g + k; }
int w_index(int g, int k) { return 2 * g + k; }

MPoly MPoly::constant(const Rational& c, VarTable table) {
  MPoly p;
  p.table_ = std::move(table);
  if (!c.is_zero()) p.terms_.emplace(Exponents(static_cast<std::size_t>(p.nvars()), 0), c);
  return p;
}

MPoly MPoly::var(const VarTable& table, int index) {
  if (!table || index < 0 || index >= static_cast<int>(table->size()))
    throw std::invalid_argument("variable index outside the table");
  MPoly p;
  p.table_ = table;
  Exponents e(table->size(), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rational MPoly::constant_term() const {
  Exponents zero(static_cast<std::size_t>(nvars()), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
  int top = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int k : e) d += k;
    top = std::max(top, d);
  }
  return top;
}

void MPoly::add_term(Exponents e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

// Lifts universal constants onto the other operand's table; rejects genuine
// table mismatches.
void MPoly::align(MPoly& a, MPoly& b) {
  auto lift = [](MPoly& p, const VarTable& table) {
    MPoly lifted = MPoly::constant(p.constant_term(), table);
    p = std::move(lifted);
  };
  if (a.table_ == b.table_) return;
  if (!a.table_) {
    if (!a.is_constant()) throw std::logic_error("untabled MPoly must be constant");
    lift(a, b.table_);
    return;
  }
  if (!b.table_) {
    if (!b.is_constant()) throw std::logic_error("untabled MPoly must be constant");
    lift(b, a.table_);
    return;
  }
  if (*a.table_ != *b.table_)
    throw std::invalid_argument("variable-table mismatch between MPoly operands");
}

MPoly MPoly::operator-() const {
  MPoly r;
  r.table_ = table_;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly x = a, y = b;
  MPoly::align(x, y);
  MPoly r;
  r.table_ = x.table_ ? x.table_ : y.table_;
  r.terms_ = x.terms_;
  for (const auto& [e, c] : y.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly x = a, y = b;
  MPoly::align(x, y);
  MPoly r;
  r.table_ = x.table_ ? x.table_ : y.table_;
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      MPoly::Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

MPoly operator*(const Rational& s, const MPoly& p) {
  MPoly r;
  r.table_ = p.table_;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.table_ == b.table_ || (a.table_ && b.table_ && *a.table_ == *b.table_))
    return a.terms_ == b.terms_;
  // One side universal: equal iff both are the same constant.
  if (!a.is_constant() || !b.is_constant()) return false;
  return a.constant_term() == b.constant_term();
}

MPoly MPoly::partial_derivative(int var) const {
  if (!table_) return MPoly();  // derivative of a constant
  if (var < 0 || var >= nvars())
    throw std::invalid_argument("partial_derivative: variable index outside the table");
  MPoly r;
  r.table_ = table_;
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents d = e;
    d[static_cast<std::size_t>(var)] = k - 1;
    r.add_term(std::move(d), Rational(k) * c);
  }
  return r;
}

Rational MPoly::substitute(const std::vector<Rational>& point) const {
  if (table_ && static_cast<int>(point.size()) != nvars())
    throw std::invalid_argument("substitute: point dimension mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int t = 0; t < e[k]; ++t) term *= point[k];
    acc += term;
  }
  return acc;
}

MPoly MPoly::substitute_vars(const std::vector<MPoly>& images) const {
  if (table_ && static_cast<int>(images.size()) != nvars())
    throw std::invalid_argument("substitute_vars: image count mismatch");
  MPoly acc;
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int t = 0; t < e[k]; ++t) term = term * images[k];
    acc = acc + term;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*" << (table_ ? (*table_)[k] : "z_" + std::to_string(k));
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

}  // namespace mumford

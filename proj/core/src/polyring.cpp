#include "tbsym/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "tbsym/errors.hpp"

namespace tbsym {

// ---------------------------------------------------------------- VarTable

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ContextError("duplicate variable name: " + names_[i]);
    }
  }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

const std::string& VarTable::name(VarIndex v) const {
  if (v >= names_.size()) throw ContextError("variable index out of range");
  return names_[v];
}

std::optional<VarIndex> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<VarIndex>(i);
  }
  return std::nullopt;
}

VarIndex VarTable::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw ContextError("unknown variable: " + std::string(name));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarIndex v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.powers_.push_back({v, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_powers(std::vector<VarPower> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const VarPower& x, const VarPower& y) { return x.var < y.var; });
  Monomial m;
  for (const auto& p : powers) {
    if (p.exp == 0) continue;
    if (!m.powers_.empty() && m.powers_.back().var == p.var) {
      m.powers_.back().exp += p.exp;
    } else {
      m.powers_.push_back(p);
    }
    m.degree_ += p.exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarIndex v) const {
  for (const auto& p : powers_) {
    if (p.var == v) return p.exp;
    if (p.var > v) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto i = powers_.begin();
  auto j = other.powers_.begin();
  while (i != powers_.end() || j != other.powers_.end()) {
    if (j == other.powers_.end() || (i != powers_.end() && i->var < j->var)) {
      out.powers_.push_back(*i++);
    } else if (i == powers_.end() || j->var < i->var) {
      out.powers_.push_back(*j++);
    } else {
      out.powers_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (other.degree_ > degree_) return false;
  auto i = powers_.begin();
  for (const auto& p : other.powers_) {
    while (i != powers_.end() && i->var < p.var) ++i;
    if (i == powers_.end() || i->var != p.var || i->exp < p.exp) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  if (!divisible_by(other)) return std::nullopt;
  Monomial out;
  auto j = other.powers_.begin();
  for (const auto& p : powers_) {
    std::uint32_t e = p.exp;
    if (j != other.powers_.end() && j->var == p.var) {
      e -= j->exp;
      ++j;
    }
    if (e > 0) out.powers_.push_back({p.var, e});
  }
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::lower(VarIndex v) const {
  Monomial out = *this;
  for (auto it = out.powers_.begin(); it != out.powers_.end(); ++it) {
    if (it->var == v) {
      if (--it->exp == 0) out.powers_.erase(it);
      --out.degree_;
      return out;
    }
  }
  throw InvariantViolation("Monomial::lower on absent variable");
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& p : powers_) {
    h ^= (static_cast<std::size_t>(p.var) << 32 | p.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  auto pa = a.powers();
  auto pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].var != pb[i].var) {
      // The monomial carrying the smaller (more significant) variable wins.
      return pa[i].var < pb[i].var ? 1 : -1;
    }
    if (pa[i].exp != pb[i].exp) return pa[i].exp < pb[i].exp ? -1 : 1;
  }
  // Equal degree and equal prefix force equal length.
  return 0;
}

// ---------------------------------------------------------------- helpers

namespace {

bool term_greater(const MultiPoly::Term& x, const MultiPoly::Term& y) {
  return grlex_compare(x.mono, y.mono) > 0;
}

void require_same_table(const MultiPoly& p, const MultiPoly& q) {
  if (p.table() != q.table()) throw ContextError("polynomials over different variable tables");
}

// Hash accumulator for products and substitutions.
class Accumulator {
 public:
  void add(const Monomial& m, const Rational& c) {
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  void add(Monomial&& m, Rational&& c) {
    auto [it, inserted] = acc_.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
  }
  std::vector<MultiPoly::Term> take() {
    std::vector<MultiPoly::Term> out;
    out.reserve(acc_.size());
    for (auto& [m, c] : acc_) {
      if (sgn(c) != 0) out.push_back({m, c});
    }
    std::sort(out.begin(), out.end(), term_greater);
    acc_.clear();
    return out;
  }

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

std::vector<MultiPoly::Term> merge(std::span<const MultiPoly::Term> a,
                                   std::span<const MultiPoly::Term> b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = grlex_compare(a[i].mono, b[j].mono);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly mul_truncated(const MultiPoly& p, const MultiPoly& q, int degree) {
  require_same_table(p, q);
  Accumulator acc;
  for (const auto& s : p.terms()) {
    if (static_cast<int>(s.mono.degree()) > degree) continue;
    for (const auto& t : q.terms()) {
      if (static_cast<int>(s.mono.degree() + t.mono.degree()) > degree) continue;
      acc.add(s.mono * t.mono, Rational(s.coeff * t.coeff));
    }
  }
  return MultiPoly::from_terms(p.table(), acc.take());
}

}  // namespace

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(VarTablePtr table) : table_(std::move(table)) {
  if (!table_) throw ContextError("null variable table");
}

MultiPoly::MultiPoly(VarTablePtr table, std::vector<Term> sorted_terms)
    : table_(std::move(table)), terms_(std::move(sorted_terms)) {}

MultiPoly MultiPoly::constant(VarTablePtr table, const Rational& value) {
  MultiPoly p(std::move(table));
  if (sgn(value) != 0) p.terms_.push_back({Monomial{}, value});
  return p;
}

MultiPoly MultiPoly::variable(VarTablePtr table, VarIndex v) {
  if (v >= table->size()) throw ContextError("variable index out of range");
  return monomial(std::move(table), Monomial::variable(v), Rational(1));
}

MultiPoly MultiPoly::variable(VarTablePtr table, std::string_view name) {
  VarIndex v = table->index(name);
  return variable(std::move(table), v);
}

MultiPoly MultiPoly::monomial(VarTablePtr table, Monomial m, const Rational& c) {
  MultiPoly p(std::move(table));
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

MultiPoly MultiPoly::from_terms(VarTablePtr table, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return MultiPoly(std::move(table), std::move(out));
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_unit());
}

int MultiPoly::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

int MultiPoly::order() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Rational(0);
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw InvariantViolation("leading term of the zero polynomial");
  return terms_.front();
}

Rational MultiPoly::eval_origin() const {
  if (!terms_.empty() && terms_.back().mono.is_unit()) return terms_.back().coeff;
  return Rational(0);
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != table_->size()) throw ContextError("evaluation point has wrong dimension");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& p : t.mono.powers()) {
      for (std::uint32_t e = 0; e < p.exp; ++e) v *= point[p.var];
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  require_same_table(*this, q);
  terms_ = merge(terms_, q.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  require_same_table(*this, q);
  terms_ = merge(terms_, q.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& q) {
  *this = *this * q;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  require_same_table(p, q);
  if (p.is_zero() || q.is_zero()) return MultiPoly(p.table());
  if (p.is_constant()) return q * p.terms_.front().coeff;
  if (q.is_constant()) return p * q.terms_.front().coeff;
  Accumulator acc;
  for (const auto& s : p.terms_) {
    for (const auto& t : q.terms_) acc.add(s.mono * t.mono, Rational(s.coeff * t.coeff));
  }
  return MultiPoly(p.table(), acc.take());
}

bool operator==(const MultiPoly& p, const MultiPoly& q) {
  return p.table_ == q.table_ && p.terms_ == q.terms_;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit_coeff = mag == 1;
    if (t.mono.is_unit()) {
      out << mag.get_str();
      continue;
    }
    if (!unit_coeff) out << mag.get_str() << '*';
    bool first_factor = true;
    for (const auto& p : t.mono.powers()) {
      if (!first_factor) out << '*';
      first_factor = false;
      out << table_->name(p.var);
      if (p.exp > 1) out << '^' << p.exp;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- free ops

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }

MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(p.table(), Rational(1));
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly partial_derive(const MultiPoly& p, VarIndex v) {
  if (v >= p.table()->size()) throw ContextError("derivative by unknown variable");
  std::vector<MultiPoly::Term> out;
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exponent(v);
    if (e == 0) continue;
    out.push_back({t.mono.lower(v), Rational(t.coeff * e)});
  }
  // Lowering one exponent can reorder terms under grlex.
  return MultiPoly::from_terms(p.table(), std::move(out));
}

MultiPoly partial_derive(const MultiPoly& p, std::string_view name) {
  return partial_derive(p, p.table()->index(name));
}

Rational eval_origin(const MultiPoly& p) { return p.eval_origin(); }

MultiPoly truncate_jet(const MultiPoly& p, int degree) {
  if (degree < 0) throw ArgumentError("jet degree must be non-negative");
  std::vector<MultiPoly::Term> out;
  for (const auto& t : p.terms()) {
    if (static_cast<int>(t.mono.degree()) <= degree) out.push_back(t);
  }
  return MultiPoly::from_terms(p.table(), std::move(out));
}

namespace {

MultiPoly substitute_impl(const MultiPoly& p, const Substitution& images,
                          std::optional<int> degree) {
  if (images.empty()) return degree ? truncate_jet(p, *degree) : p;
  VarTablePtr target = images.begin()->second.table();
  for (const auto& [v, img] : images) {
    if (img.table() != target) throw ContextError("substitution images over mixed tables");
    if (v >= p.table()->size()) throw ContextError("substitution of unknown variable");
  }
  const bool same_table = target == p.table();
  auto times = [&](const MultiPoly& x, const MultiPoly& y) {
    return degree ? mul_truncated(x, y, *degree) : x * y;
  };

  // Cached powers of each image, grown on demand.
  std::map<VarIndex, std::vector<MultiPoly>> powers;
  auto power_of = [&](VarIndex v, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
    const MultiPoly& base = images.at(v);
    while (cache.size() <= e) cache.push_back(times(cache.back(), base));
    return cache[e];
  };

  MultiPoly sum(target);
  Accumulator acc;
  for (const auto& t : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, t.coeff);
    std::vector<VarPower> kept;
    for (const auto& vp : t.mono.powers()) {
      if (images.count(vp.var)) {
        term = times(term, power_of(vp.var, vp.exp));
      } else {
        if (!same_table) {
          throw ContextError("variable " + p.table()->name(vp.var) +
                             " left unmapped in a cross-table substitution");
        }
        kept.push_back(vp);
      }
    }
    Monomial rest = Monomial::from_powers(std::move(kept));
    for (const auto& s : term.terms()) {
      Monomial m = s.mono * rest;
      if (degree && static_cast<int>(m.degree()) > *degree) continue;
      acc.add(std::move(m), Rational(s.coeff));
    }
  }
  return MultiPoly::from_terms(target, acc.take());
}

}  // namespace

MultiPoly substitute(const MultiPoly& p, const Substitution& images) {
  return substitute_impl(p, images, std::nullopt);
}

MultiPoly substitute_jet(const MultiPoly& p, const Substitution& images, int degree) {
  if (degree < 0) throw ArgumentError("jet degree must be non-negative");
  return substitute_impl(p, images, degree);
}

MultiPoly normalized(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_class d = t.coeff.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    mpz_class n = abs(t.coeff.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.leading_term().coeff) < 0) scale = -scale;
  return p * scale;
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
  require_same_table(p, q);
  if (q.is_zero()) throw InvariantViolation("division by the zero polynomial");
  if (q.is_constant()) return p * Rational(1 / q.leading_term().coeff);
  const auto& lead = q.leading_term();
  std::vector<MultiPoly::Term> quotient;
  MultiPoly rem = p;
  while (!rem.is_zero()) {
    const auto& top = rem.leading_term();
    auto m = top.mono.divide(lead.mono);
    if (!m) throw InvariantViolation("exact_divide: divisor does not divide dividend");
    Rational c = top.coeff / lead.coeff;
    quotient.push_back({*m, c});
    rem -= MultiPoly::monomial(p.table(), *m, c) * q;
  }
  return MultiPoly::from_terms(p.table(), std::move(quotient));
}

std::vector<Rational> linear_part(const MultiPoly& p) {
  std::vector<Rational> out(p.table()->size(), Rational(0));
  for (const auto& t : p.terms()) {
    if (t.mono.degree() == 1) out[t.mono.powers().front().var] = t.coeff;
  }
  return out;
}

}  // namespace tbsym

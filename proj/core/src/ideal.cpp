#include "tbsym/ideal.hpp"

#include <utility>

#include "tbsym/errors.hpp"
#include "tbsym/linalg.hpp"

namespace tbsym {

// ---------------------------------------------------------------- TBSymbol

TBSymbol::TBSymbol(std::vector<std::size_t> entries) : entries_(std::move(entries)) {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] == 0) throw ArgumentError("symbol entries must be positive");
    if (k > 0 && entries_[k] > entries_[k - 1]) throw ArgumentError("symbol must be non-increasing");
  }
}

std::string TBSymbol::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(entries_[k]);
  }
  return out;
}

// ---------------------------------------------------------------- ideals

std::size_t poly_hash(const MultiPoly& p) {
  std::size_t h = p.size();
  for (const auto& t : p.terms()) {
    const std::size_t num = mpz_get_ui(t.coeff.get_num_mpz_t());
    const std::size_t den = mpz_get_ui(t.coeff.get_den_mpz_t());
    const std::size_t sign = static_cast<std::size_t>(sgn(t.coeff) + 1);
    for (std::size_t v : {t.mono.hash(), num, den, sign}) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

IdealPresentation::IdealPresentation(VarTablePtr table) : table_(std::move(table)) {}

bool IdealPresentation::contains_generator(const MultiPoly& g) const {
  const MultiPoly n = normalized(g);
  auto [lo, hi] = index_.equal_range(poly_hash(n));
  for (auto it = lo; it != hi; ++it) {
    if (gens_[it->second] == n) return true;
  }
  return false;
}

bool IdealPresentation::adjoin(const MultiPoly& g, Provenance provenance) {
  if (g.table() != table_) throw ContextError("generator over another table");
  if (eval_origin(g) != 0) throw ArgumentError("generator does not vanish at the origin");
  if (g.is_zero()) return false;
  MultiPoly n = normalized(g);
  const std::size_t h = poly_hash(n);
  auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    if (gens_[it->second] == n) return false;
  }
  index_.emplace(h, gens_.size());
  gens_.push_back(std::move(n));
  prov_.push_back(std::move(provenance));
  return true;
}

std::size_t rank_at_origin(const IdealPresentation& ideal) {
  const std::size_t m = ideal.table()->size();
  if (ideal.size() == 0) return 0;
  RatMatrix lin(ideal.size(), m);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const auto row = linear_part(ideal.generators()[i]);
    for (std::size_t j = 0; j < m; ++j) lin(i, j) = row[j];
  }
  return rank_rational(lin);
}

std::size_t corank_at_origin(const IdealPresentation& ideal) {
  return ideal.table()->size() - rank_at_origin(ideal);
}

// ---------------------------------------------------------------- spans

LinearSpan::LinearSpan(VarTablePtr table) : table_(std::move(table)) {}

MultiPoly LinearSpan::reduce(MultiPoly p) const {
  // Eliminating a pivot only touches smaller monomials, so rescanning from the
  // top terminates.
  for (;;) {
    const MultiPoly* pivot_row = nullptr;
    Rational c;
    for (const auto& t : p.terms()) {
      auto it = basis_.find(t.mono);
      if (it != basis_.end()) {
        pivot_row = &it->second;
        c = t.coeff;
        break;
      }
    }
    if (pivot_row == nullptr) return p;
    p -= c * *pivot_row;
  }
}

bool LinearSpan::insert(const MultiPoly& p) {
  MultiPoly r = reduce(p);
  if (r.is_zero()) return false;
  const Rational lead = r.leading_term().coeff;
  r *= Rational(1) / lead;
  Monomial key = r.leading_term().mono;
  basis_.emplace(std::move(key), std::move(r));
  return true;
}

bool LinearSpan::contains(const MultiPoly& p) const { return reduce(p).is_zero(); }

std::vector<Monomial> monomials_up_to(std::size_t variables, int degree) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (int d = 1; d <= degree; ++d) {
    std::vector<Monomial> next;
    // Extend each monomial by a variable no smaller than its largest one, so
    // every monomial is produced exactly once.
    for (const auto& m : layer) {
      const VarIndex start = m.is_unit() ? 0 : m.powers().back().var;
      for (VarIndex v = start; v < variables; ++v) next.push_back(m * Monomial::variable(v));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

JetSpan::JetSpan(const IdealPresentation& ideal, int degree)
    : JetSpan(ideal.table(), ideal.generators(), degree) {}

JetSpan::JetSpan(const VarTablePtr& table, const std::vector<MultiPoly>& generators, int degree)
    : degree_(degree), span_(table) {
  if (degree < 1) throw ArgumentError("jet degree must be at least 1");
  const std::size_t m = table->size();
  const std::size_t full = binomial(m + static_cast<std::size_t>(degree), m) - 1;
  const std::vector<Monomial> multipliers = monomials_up_to(m, degree - 1);
  for (const auto& g0 : generators) {
    if (span_.dimension() == full) break;
    const MultiPoly g = truncate_jet(g0, degree);
    if (g.is_zero()) continue;
    if (eval_origin(g) != 0) throw ArgumentError("jet span generator does not vanish at the origin");
    const int room = degree - g.order();
    for (const auto& u : multipliers) {
      if (static_cast<int>(u.degree()) > room) break;
      span_.insert(truncate_jet(MultiPoly::monomial(table, u, Rational(1)) * g, degree));
    }
  }
}

bool JetSpan::contains(const MultiPoly& p) const { return span_.contains(truncate_jet(p, degree_)); }

bool jet_membership(const MultiPoly& p, const IdealPresentation& ideal, int degree) {
  return JetSpan(ideal, degree).contains(p);
}

bool ideal_equal_mod_jet(const IdealPresentation& lhs, const IdealPresentation& rhs, int degree) {
  if (lhs.table() != rhs.table()) throw ContextError("jet comparison over different tables");
  const JetSpan l(lhs, degree);
  const JetSpan r(rhs, degree);
  for (const auto& g : rhs.generators()) {
    if (!l.contains(g)) return false;
  }
  for (const auto& g : lhs.generators()) {
    if (!r.contains(g)) return false;
  }
  return true;
}

}  // namespace tbsym

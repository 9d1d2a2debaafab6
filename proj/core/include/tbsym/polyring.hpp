#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tbsym {

using Rational = mpq_class;
using VarIndex = std::uint32_t;

/// Ordered list of named variables. Indices are contiguous from 0 and fixed
/// for the lifetime of the table; polynomials share a table by pointer.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(VarIndex v) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VarIndex> find(std::string_view name) const;
  /// Throws ContextError for an unknown name.
  VarIndex index(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

struct VarPower {
  VarIndex var;
  std::uint32_t exp;

  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Sparse power product. Powers are sorted by variable index, exponents are
/// positive; the empty product is the unit monomial.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarIndex v, std::uint32_t exp = 1);
  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_powers(std::vector<VarPower> powers);

  std::uint32_t degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return powers_.empty(); }
  std::uint32_t exponent(VarIndex v) const;
  std::span<const VarPower> powers() const noexcept { return powers_; }

  Monomial operator*(const Monomial& other) const;
  /// this / other when other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;
  /// Lowers the exponent of v by one; v must be present.
  Monomial lower(VarIndex v) const;
  bool divisible_by(const Monomial& other) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.powers_ == b.powers_;
  }

 private:
  std::vector<VarPower> powers_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison, variable 0 most significant.
/// Negative when a < b, zero when equal, positive when a > b.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Exact sparse polynomial with rational coefficients. Terms are kept in
/// descending graded-lex order with no zero coefficients, so two polynomials
/// are equal iff their term lists are identical.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit MultiPoly(VarTablePtr table);

  static MultiPoly constant(VarTablePtr table, const Rational& value);
  static MultiPoly variable(VarTablePtr table, VarIndex v);
  static MultiPoly variable(VarTablePtr table, std::string_view name);
  static MultiPoly monomial(VarTablePtr table, Monomial m, const Rational& c);
  /// Accepts terms in any order, with repeats and zeros.
  static MultiPoly from_terms(VarTablePtr table, std::vector<Term> terms);

  const VarTablePtr& table() const noexcept { return table_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Lowest total degree of a term; -1 for the zero polynomial.
  int order() const noexcept;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const;

  Rational eval_origin() const;
  Rational evaluate(std::span<const Rational> point) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const MultiPoly& q);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }

  friend bool operator==(const MultiPoly& p, const MultiPoly& q);

  /// Canonical rendering, e.g. "a1*b0 - b0^2 - 3/2*a0".
  std::string to_string() const;

 private:
  MultiPoly(VarTablePtr table, std::vector<Term> sorted_terms);

  VarTablePtr table_;
  std::vector<Term> terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly pow(const MultiPoly& p, unsigned k);
MultiPoly partial_derive(const MultiPoly& p, VarIndex v);
MultiPoly partial_derive(const MultiPoly& p, std::string_view name);
Rational eval_origin(const MultiPoly& p);
/// Drops every term of total degree above `degree`.
MultiPoly truncate_jet(const MultiPoly& p, int degree);

/// Maps source variables to images over a single target table. Variables not
/// in the map are kept, which requires the target table to be p's own.
using Substitution = std::map<VarIndex, MultiPoly>;
MultiPoly substitute(const MultiPoly& p, const Substitution& images);
/// As substitute(), but every product is truncated at total degree `degree`.
/// Exact on jets when all images vanish at the origin.
MultiPoly substitute_jet(const MultiPoly& p, const Substitution& images, int degree);

/// Scales to integer coefficients with gcd 1 and a positive leading
/// coefficient. Zero stays zero.
MultiPoly normalized(const MultiPoly& p);

/// p / q when q divides p exactly; throws InvariantViolation otherwise.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q);

/// Coefficients of the linear terms, indexed by variable.
std::vector<Rational> linear_part(const MultiPoly& p);

std::string to_string(const Rational& q);

}  // namespace tbsym

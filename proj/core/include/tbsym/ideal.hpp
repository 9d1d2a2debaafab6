#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "tbsym/polyring.hpp"

namespace tbsym {

/// Finite non-increasing sequence of positive integers.
class TBSymbol {
 public:
  TBSymbol() = default;
  /// Trailing zeros are dropped; anything else out of shape is an ArgumentError.
  explicit TBSymbol(std::vector<std::size_t> entries);

  const std::vector<std::size_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// "3,2,1,1"; the empty symbol renders as "".
  std::string to_string() const;

  friend bool operator==(const TBSymbol&, const TBSymbol&) = default;

 private:
  std::vector<std::size_t> entries_;
};

enum class GeneratorOrigin { kOriginal, kMinor, kStructured };

struct Provenance {
  GeneratorOrigin origin = GeneratorOrigin::kOriginal;
  std::string label;  // "c3", "minor(step=1,rows=[0,1],cols=[0,2])", "psi4", ...
};

/// Generator list of an ideal in the local ring at the origin. Generators are
/// stored normalized and without repeats; each must vanish at the origin.
class IdealPresentation {
 public:
  explicit IdealPresentation(VarTablePtr table);

  /// Adds normalized(g) unless it is zero or already present; returns whether
  /// it was added. Throws ArgumentError if g(0) != 0.
  bool adjoin(const MultiPoly& g, Provenance provenance);

  const VarTablePtr& table() const noexcept { return table_; }
  const std::vector<MultiPoly>& generators() const noexcept { return gens_; }
  const std::vector<Provenance>& provenance() const noexcept { return prov_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool contains_generator(const MultiPoly& g) const;

 private:
  VarTablePtr table_;
  std::vector<MultiPoly> gens_;
  std::vector<Provenance> prov_;
  std::unordered_multimap<std::size_t, std::size_t> index_;  // hash -> position
};

std::size_t poly_hash(const MultiPoly& p);

/// Rank over Q of the linear parts of the generators.
std::size_t rank_at_origin(const IdealPresentation& ideal);
/// Number of variables minus rank_at_origin.
std::size_t corank_at_origin(const IdealPresentation& ideal);

/// Row-echelon basis of a Q-subspace of polynomials. Each basis element has a
/// distinct leading monomial with coefficient 1.
class LinearSpan {
 public:
  explicit LinearSpan(VarTablePtr table);

  /// Adds p to the span; returns false when p was already in it.
  bool insert(const MultiPoly& p);
  bool contains(const MultiPoly& p) const;
  std::size_t dimension() const noexcept { return basis_.size(); }

 private:
  MultiPoly reduce(MultiPoly p) const;

  VarTablePtr table_;
  std::unordered_map<Monomial, MultiPoly, MonomialHash> basis_;
};

/// The image of an ideal in the jet space Q[x] / m^{D+1}.
class JetSpan {
 public:
  JetSpan(const IdealPresentation& ideal, int degree);
  JetSpan(const VarTablePtr& table, const std::vector<MultiPoly>& generators, int degree);

  /// Membership of truncate_jet(p, D).
  bool contains(const MultiPoly& p) const;
  int degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return span_.dimension(); }

 private:
  int degree_;
  LinearSpan span_;
};

/// p in ideal + m^{D+1}. D >= 1.
bool jet_membership(const MultiPoly& p, const IdealPresentation& ideal, int degree);
/// Each side's generators lie in the other side mod m^{D+1}.
bool ideal_equal_mod_jet(const IdealPresentation& lhs, const IdealPresentation& rhs, int degree);

/// Monomials of total degree <= d in m variables, in ascending degree.
std::vector<Monomial> monomials_up_to(std::size_t variables, int degree);

}  // namespace tbsym

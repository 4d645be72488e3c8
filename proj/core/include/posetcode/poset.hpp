#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetcode/gf2.hpp"

namespace posetcode {

/// Two-level hierarchical poset on [n]: a lower level U = {1,...,m} of
/// pairwise incomparable elements, an upper level V = {m+1,...,m+l}, and
/// u < v exactly when u is in U and v is in V.
class HierarchicalPoset {
 public:
  HierarchicalPoset(int m, int l);

  int m() const { return m_; }
  int l() const { return l_; }
  int n() const { return m_ + l_; }

  friend bool operator==(const HierarchicalPoset&, const HierarchicalPoset&) =
      default;

 private:
  int m_;
  int l_;
};

/// Packs a lower part (width m) and an upper part (width l) into a width-n
/// subset vector: coordinates 1..m are beta, coordinates m+1..n are gamma.
BitVec compose(const HierarchicalPoset& p, const BitVec& beta,
               const BitVec& gamma);
/// Lower-level part of a width-n subset vector, width m.
BitVec beta_part(const HierarchicalPoset& p, const BitVec& v);
/// Upper-level part of a width-n subset vector, width l.
BitVec gamma_part(const HierarchicalPoset& p, const BitVec& v);

/// Order ideal of the hierarchical poset: either a plain lower-level subset
/// (gamma = 0) or [m] together with an upper subset B (beta all ones).
class OrderIdeal {
 public:
  OrderIdeal(BitVec beta, BitVec gamma);

  const BitVec& beta() const { return beta_; }
  const BitVec& gamma() const { return gamma_; }
  /// True when the ideal has the form [m] union B with B nonempty.
  bool has_upper() const { return !gamma_.is_zero(); }

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  BitVec beta_;
  BitVec gamma_;
};

/// Whether a width-n subset vector is an order ideal of p. The empty set
/// counts as an ideal, so it never enters a defining set.
bool is_order_ideal(const HierarchicalPoset& p, const BitVec& subset);

/// Smallest order ideal containing a nonempty subset E.
OrderIdeal generated_ideal(const HierarchicalPoset& p, const BitVec& e);

/// All order ideals contained in `ideal`, as width-n subset vectors in
/// canonical order. For an ideal [m] union B the list has 2^m + 2^|B| - 1
/// members (the empty set included). When gamma = 0 the result is the plain
/// power set of beta, which is not a construction input.
std::vector<BitVec> downset(const HierarchicalPoset& p, const OrderIdeal& ideal);

/// Antichain of generating ideals [m] union B_1, ..., [m] union B_t given by
/// their upper parts. Construction canonicalizes: B-sets are sorted in
/// canonical order and deduplicated; optionally the non-maximal ones are
/// dropped (they never change the defining sets).
class IdealFamily {
 public:
  static IdealFamily create(const HierarchicalPoset& p,
                            std::vector<BitVec> b_sets,
                            bool drop_redundant = false);

  const HierarchicalPoset& poset() const { return poset_; }
  std::span<const BitVec> b_sets() const { return b_sets_; }
  int t() const { return static_cast<int>(b_sets_.size()); }
  std::vector<OrderIdeal> ideals() const;

 private:
  IdealFamily(HierarchicalPoset p, std::vector<BitVec> b_sets)
      : poset_(p), b_sets_(std::move(b_sets)) {}

  HierarchicalPoset poset_;
  std::vector<BitVec> b_sets_;
};

/// Parses the family syntax: ideals separated by ';', upper-level elements
/// inside an ideal separated by ',', labelled m+1..n. "3;3,4" at m = 2,
/// l = 2 means B_1 = {3}, B_2 = {3,4}.
IdealFamily parse_family(const HierarchicalPoset& p, std::string_view text,
                         bool drop_redundant = false);
/// Canonical text form of a family in the same syntax.
std::string to_text(const IdealFamily& family);

/// The vectors (beta, gamma) with beta != all-ones and gamma != 0, in
/// canonical order: the family-independent part of every defining set.
std::vector<BitVec> d0_vectors(const HierarchicalPoset& p);

/// Defining sets of a family: D0 as above, D1 the vectors (all-ones, gamma)
/// whose gamma is contained in no B_i, and D their disjoint union, each in
/// canonical order. D equals the complement of the union of the downsets of
/// the generating ideals inside the nonzero vectors; construction verifies
/// this identity.
struct DefiningSetBundle {
  IdealFamily family;
  std::vector<BitVec> d0;
  std::vector<BitVec> d1;
  std::vector<BitVec> d;
};

DefiningSetBundle defining_sets(const IdealFamily& family);

}  // namespace posetcode

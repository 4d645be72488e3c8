#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace posetcode {

/// Vector in F_2^k, 1 <= k <= 64, packed into one machine word.
/// Bit i-1 of the mask holds coordinate i, so the canonical order of
/// same-width vectors is the ascending unsigned value of the mask.
class BitVec {
 public:
  BitVec(int width, std::uint64_t bits);

  static BitVec zero(int width) { return BitVec(width, 0); }
  static BitVec ones(int width);
  /// Standard basis vector e_coord, 1-based.
  static BitVec unit(int width, int coord);
  /// Parses a '0'/'1' string, coordinate 1 leftmost.
  static BitVec from_string(std::string_view s);

  int width() const { return width_; }
  std::uint64_t mask() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_ones() const;
  /// Coordinate access, 1-based.
  bool bit(int coord) const;
  int weight() const;
  /// 1-based coordinates of the nonzero entries, ascending.
  std::vector<int> support() const;
  /// Suppt(*this) as a subset of Suppt(other).
  bool subset_of(const BitVec& other) const;
  /// Inverse of from_string.
  std::string to_string() const;

  BitVec operator^(const BitVec& other) const;
  BitVec operator&(const BitVec& other) const;
  BitVec& operator^=(const BitVec& other);

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend std::strong_ordering operator<=>(const BitVec&, const BitVec&) = default;

 private:
  int width_;
  std::uint64_t bits_;
};

/// Standard inner product over F_2: parity of the support intersection.
int dot(const BitVec& u, const BitVec& v);

/// Fully reduced row-echelon basis of a subspace of F_2^k.
/// Rows are kept in descending mask order; pivots are the leading (highest)
/// bits, pairwise distinct, and each pivot bit is zero in every other row.
class EchelonBasis {
 public:
  explicit EchelonBasis(int width);

  int width() const { return width_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  std::span<const BitVec> rows() const { return rows_; }
  /// Pivot bit positions (0-based), one per row, in row order (descending).
  std::vector<int> pivots() const;

  /// Adds v to the span. Returns true iff the dimension grew.
  bool insert(const BitVec& v);
  /// Canonical representative of v modulo the span: clears every pivot bit.
  /// The result is the minimum of the coset v + span in canonical order.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

 private:
  int width_;
  std::vector<BitVec> rows_;
};

/// Rank of a list of same-width vectors. rank({}) = 0.
int rank(std::span<const BitVec> vectors);

/// Basis of {y in F_2^k : y.d = 0 for every d in vectors}.
/// dim = k - rank(vectors).
EchelonBasis kernel(std::span<const BitVec> vectors, int k);

/// All 2^k vectors of F_2^k in canonical (ascending mask) order.
class VectorRange {
 public:
  explicit VectorRange(int width);

  class iterator {
   public:
    using value_type = BitVec;
    using difference_type = std::ptrdiff_t;

    iterator() : width_(1), value_(0), done_(true) {}
    iterator(int width, std::uint64_t value, bool done)
        : width_(width), value_(value), done_(done) {}

    BitVec operator*() const { return BitVec(width_, value_); }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    int width_;
    std::uint64_t value_;
    bool done_;
  };

  iterator begin() const { return iterator(width_, 0, false); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int width_;
};

/// Re-expression of a vector list in coordinates of a basis of its span.
/// For inputs of width k and rank r, `vectors` holds the same list rewritten
/// with width r; evaluating x.d over the originals equals evaluating
/// project_coeff(x).d' over the rewrite, so the generated code is unchanged
/// as a set of codewords.
struct RankReduction {
  int original_width = 0;
  int reduced_width = 0;
  /// Pivot bit positions of the span basis, ascending; reduced coordinate
  /// i+1 corresponds to original bit pivot_bits[i].
  std::vector<int> pivot_bits;
  EchelonBasis basis;
  std::vector<BitVec> vectors;

  /// Gathers the pivot bits of a span member (columns of the rewrite).
  BitVec project_column(const BitVec& d) const;
  /// Coefficient map x -> (x.b_1, ..., x.b_r) for the pivot-ordered basis.
  BitVec project_coeff(const BitVec& x) const;
  /// Right inverse of project_coeff: scatters y into the pivot bits.
  BitVec lift_coeff(const BitVec& y) const;
};

/// Builds the rank reduction of a vector list. Throws if the span is {0}.
RankReduction reduce_to_full_rank(std::span<const BitVec> vectors, int k);

}  // namespace posetcode

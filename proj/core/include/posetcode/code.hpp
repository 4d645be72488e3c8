#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "posetcode/budget.hpp"
#include "posetcode/gf2.hpp"

namespace posetcode {

/// Bit string of arbitrary length; used for codeword values, whose length is
/// the defining-set size and routinely exceeds one word.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Suppt(other) as a subset of Suppt(*this). Sizes must match.
  bool covers(const Bits& other) const;
  Bits& operator^=(const Bits& other);
  std::string to_string() const;

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Defining set D in F_2^k: the column multiset of the construction, held
/// with set semantics (columns sorted in canonical order, deduplicated) and
/// a cached rank. The generated code is {(x.d_1, ..., x.d_N) : x in F_2^k}.
class DefiningSet {
 public:
  static DefiningSet from_vectors(int k, std::vector<BitVec> columns);

  int k() const { return k_; }
  std::size_t size() const { return columns_.size(); }
  int rank() const { return rank_; }
  bool full_rank() const { return rank_ == k_; }
  std::span<const BitVec> columns() const { return columns_; }
  const BitVec& column(std::size_t j) const { return columns_[j]; }

 private:
  DefiningSet(int k, std::vector<BitVec> columns, int rank)
      : k_(k), columns_(std::move(columns)), rank_(rank) {}

  int k_;
  std::vector<BitVec> columns_;
  int rank_;
};

/// Codeword c(x) = (x.d_1, ..., x.d_N) with its value cached; the value is
/// also the support mask.
struct Codeword {
  BitVec x;
  Bits value;

  int weight() const { return static_cast<int>(value.count()); }
  std::vector<std::size_t> support() const;
};

Codeword codeword(const BitVec& x, const DefiningSet& d);

/// Cover order on values of the same length: Suppt(b) a subset of Suppt(c).
bool covers(const Codeword& c, const Codeword& b);

/// Canonical coset representatives of F_2^k modulo the dual D-perp: the
/// minimum element of each coset in canonical order, enumerated ascending,
/// zero included. Distinct representatives give distinct codewords, so this
/// is exactly one x per codeword of the generated code.
class CosetReps {
 public:
  explicit CosetReps(const DefiningSet& d);

  int k() const { return k_; }
  int rank() const { return rank_; }
  /// Number of representatives (2^rank). Requires rank < 64.
  std::uint64_t count() const;
  const EchelonBasis& dual_basis() const { return dual_; }
  /// Minimum of the coset x + D-perp.
  BitVec canonicalize(const BitVec& x) const { return dual_.reduce(x); }
  /// Representative for counter c < 2^rank, ascending in c.
  BitVec rep(std::uint64_t c) const;

  class iterator {
   public:
    using value_type = BitVec;
    using difference_type = std::ptrdiff_t;

    iterator() : owner_(nullptr), counter_(0), done_(true) {}
    iterator(const CosetReps* owner, std::uint64_t counter, bool done)
        : owner_(owner), counter_(counter), done_(done) {}

    BitVec operator*() const { return owner_->rep(counter_); }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    const CosetReps* owner_;
    std::uint64_t counter_;
    bool done_;
  };

  iterator begin() const { return iterator(this, 0, false); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int k_;
  int rank_;
  EchelonBasis dual_;
  std::vector<int> free_bits_;
};

/// Weight counts over the distinct nonzero codewords of the generated code.
struct WeightDistribution {
  std::map<int, std::uint64_t> counts;
  int w_min = 0;
  int w_max = 0;

  bool empty() const { return counts.empty(); }
};

/// Enumerates one coset representative per distinct codeword. Refuses when
/// k exceeds the definitional enumeration budget.
WeightDistribution weight_distribution(const DefiningSet& d,
                                       const Budget& budget = {});

/// Generator matrix whose row i is the codeword of the i-th standard basis
/// vector; columns follow the canonical defining-set order.
struct GeneratorMatrix {
  int k = 0;
  std::size_t columns = 0;
  std::vector<Bits> rows;

  /// Plain-text export: one row per line, characters '0'/'1'.
  std::string to_text() const;
};

GeneratorMatrix generator_matrix(const DefiningSet& d);

}  // namespace posetcode

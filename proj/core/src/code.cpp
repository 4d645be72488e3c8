#include "posetcode/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace posetcode {

Bits::Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

bool Bits::test(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("Bits::test: index out of range");
  return (words_[i / 64] >> (i % 64)) & 1;
}

void Bits::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("Bits::set: index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= bit;
  else
    words_[i / 64] &= ~bit;
}

std::size_t Bits::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bits::any() const {
  for (std::uint64_t w : words_)
    if (w != 0) return true;
  return false;
}

bool Bits::covers(const Bits& other) const {
  if (size_ != other.size_)
    throw std::invalid_argument("Bits::covers: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((other.words_[i] & ~words_[i]) != 0) return false;
  return true;
}

Bits& Bits::operator^=(const Bits& other) {
  if (size_ != other.size_)
    throw std::invalid_argument("Bits::operator^=: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string Bits::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

DefiningSet DefiningSet::from_vectors(int k, std::vector<BitVec> columns) {
  if (k < 1 || k > 64)
    throw std::invalid_argument("DefiningSet: k must be in [1, 64]");
  for (const BitVec& c : columns)
    if (c.width() != k)
      throw std::invalid_argument("DefiningSet: column width differs from k");
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  const int r = posetcode::rank(columns);
  return DefiningSet(k, std::move(columns), r);
}

std::vector<std::size_t> Codeword::support() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < value.size(); ++j)
    if (value.test(j)) out.push_back(j);
  return out;
}

Codeword codeword(const BitVec& x, const DefiningSet& d) {
  if (x.width() != d.k())
    throw std::invalid_argument("codeword: coefficient width differs from k");
  Codeword c{x, Bits(d.size())};
  for (std::size_t j = 0; j < d.size(); ++j)
    if (dot(x, d.column(j)) == 1) c.value.set(j);
  return c;
}

bool covers(const Codeword& c, const Codeword& b) {
  if (c.value.size() != b.value.size())
    throw std::invalid_argument("covers: codewords from different defining sets");
  return c.value.covers(b.value);
}

CosetReps::CosetReps(const DefiningSet& d)
    : k_(d.k()), rank_(d.rank()), dual_(kernel(d.columns(), d.k())) {
  std::vector<int> pivots = dual_.pivots();
  std::sort(pivots.begin(), pivots.end());
  auto pivot = pivots.begin();
  for (int bit = 0; bit < k_; ++bit) {
    if (pivot != pivots.end() && *pivot == bit) {
      ++pivot;
      continue;
    }
    free_bits_.push_back(bit);
  }
  if (static_cast<int>(free_bits_.size()) != rank_)
    throw std::logic_error("CosetReps: dual dimension mismatch");
}

std::uint64_t CosetReps::count() const {
  if (rank_ >= 64)
    throw std::domain_error("CosetReps::count: 2^64 does not fit");
  return std::uint64_t{1} << rank_;
}

BitVec CosetReps::rep(std::uint64_t c) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < free_bits_.size(); ++i)
    if ((c >> i) & 1) out |= std::uint64_t{1} << free_bits_[i];
  return BitVec(k_, out);
}

CosetReps::iterator& CosetReps::iterator::operator++() {
  const int r = owner_->rank();
  ++counter_;
  if (r < 64 && counter_ == (std::uint64_t{1} << r)) done_ = true;
  if (r == 64 && counter_ == 0) done_ = true;
  return *this;
}

WeightDistribution weight_distribution(const DefiningSet& d,
                                       const Budget& budget) {
  if (d.k() > budget.max_k_definitional)
    throw BudgetExceeded(
        "weight_distribution: k = " + std::to_string(d.k()) +
        " exceeds the enumeration budget (max " +
        std::to_string(budget.max_k_definitional) + ")");
  WeightDistribution wd;
  for (const BitVec x : CosetReps(d)) {
    if (x.is_zero()) continue;
    const int w = codeword(x, d).weight();
    ++wd.counts[w];
  }
  if (!wd.counts.empty()) {
    wd.w_min = wd.counts.begin()->first;
    wd.w_max = wd.counts.rbegin()->first;
  }
  return wd;
}

std::string GeneratorMatrix::to_text() const {
  std::string out;
  out.reserve(rows.size() * (columns + 1));
  for (const Bits& row : rows) {
    out += row.to_string();
    out += '\n';
  }
  return out;
}

GeneratorMatrix generator_matrix(const DefiningSet& d) {
  GeneratorMatrix g{d.k(), d.size(), {}};
  g.rows.reserve(static_cast<std::size_t>(d.k()));
  for (int i = 1; i <= d.k(); ++i)
    g.rows.push_back(codeword(BitVec::unit(d.k(), i), d).value);
  return g;
}

}  // namespace posetcode

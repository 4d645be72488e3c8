#include "posetcode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace posetcode {

namespace {

std::uint64_t width_mask(int width) {
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

int leading_bit(std::uint64_t bits) {
  return std::bit_width(bits) - 1;
}

}  // namespace

BitVec::BitVec(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width < 1 || width > 64)
    throw std::invalid_argument("BitVec width must be in [1, 64]");
  if ((bits & ~width_mask(width)) != 0)
    throw std::invalid_argument("BitVec mask has bits beyond its width");
}

BitVec BitVec::ones(int width) {
  if (width < 1 || width > 64)
    throw std::invalid_argument("BitVec width must be in [1, 64]");
  return BitVec(width, width_mask(width));
}

BitVec BitVec::unit(int width, int coord) {
  if (coord < 1 || coord > width)
    throw std::invalid_argument("unit coordinate out of range");
  return BitVec(width, std::uint64_t{1} << (coord - 1));
}

BitVec BitVec::from_string(std::string_view s) {
  if (s.empty() || s.size() > 64)
    throw std::invalid_argument("BitVec string length must be in [1, 64]");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("BitVec string must contain only '0'/'1'");
  }
  return BitVec(static_cast<int>(s.size()), bits);
}

bool BitVec::is_ones() const { return bits_ == width_mask(width_); }

bool BitVec::bit(int coord) const {
  if (coord < 1 || coord > width_)
    throw std::invalid_argument("coordinate out of range");
  return (bits_ >> (coord - 1)) & 1;
}

int BitVec::weight() const { return std::popcount(bits_); }

std::vector<int> BitVec::support() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(weight()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

bool BitVec::subset_of(const BitVec& other) const {
  if (width_ != other.width_)
    throw std::invalid_argument("subset_of: width mismatch");
  return (bits_ & ~other.bits_) == 0;
}

std::string BitVec::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i)
    if ((bits_ >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

BitVec BitVec::operator^(const BitVec& other) const {
  if (width_ != other.width_)
    throw std::invalid_argument("operator^: width mismatch");
  return BitVec(width_, bits_ ^ other.bits_);
}

BitVec BitVec::operator&(const BitVec& other) const {
  if (width_ != other.width_)
    throw std::invalid_argument("operator&: width mismatch");
  return BitVec(width_, bits_ & other.bits_);
}

BitVec& BitVec::operator^=(const BitVec& other) {
  *this = *this ^ other;
  return *this;
}

int dot(const BitVec& u, const BitVec& v) {
  if (u.width() != v.width())
    throw std::invalid_argument("dot: width mismatch");
  return std::popcount(u.mask() & v.mask()) & 1;
}

EchelonBasis::EchelonBasis(int width) : width_(width) {
  if (width < 1 || width > 64)
    throw std::invalid_argument("EchelonBasis width must be in [1, 64]");
}

std::vector<int> EchelonBasis::pivots() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const BitVec& row : rows_) out.push_back(leading_bit(row.mask()));
  return out;
}

BitVec EchelonBasis::reduce(BitVec v) const {
  if (v.width() != width_)
    throw std::invalid_argument("reduce: width mismatch");
  std::uint64_t bits = v.mask();
  for (const BitVec& row : rows_) {
    const std::uint64_t lead = std::uint64_t{1} << leading_bit(row.mask());
    if (bits & lead) bits ^= row.mask();
  }
  return BitVec(width_, bits);
}

bool EchelonBasis::insert(const BitVec& v) {
  BitVec r = reduce(v);
  if (r.is_zero()) return false;
  const std::uint64_t lead = std::uint64_t{1} << leading_bit(r.mask());
  for (BitVec& row : rows_)
    if (row.mask() & lead) row ^= r;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), r,
                              [](const BitVec& a, const BitVec& b) {
                                return a.mask() > b.mask();
                              });
  rows_.insert(pos, r);
  return true;
}

int rank(std::span<const BitVec> vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().width());
  for (const BitVec& v : vectors) basis.insert(v);
  return basis.dim();
}

EchelonBasis kernel(std::span<const BitVec> vectors, int k) {
  std::vector<BitVec> rows;
  rows.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) rows.push_back(BitVec::unit(k, i));
  for (const BitVec& d : vectors) {
    if (d.width() != k)
      throw std::invalid_argument("kernel: vector width differs from k");
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (dot(rows[i], d) == 1) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    for (std::size_t i = pivot + 1; i < rows.size(); ++i)
      if (dot(rows[i], d) == 1) rows[i] ^= rows[pivot];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
  }
  EchelonBasis basis(k);
  for (const BitVec& row : rows) basis.insert(row);
  return basis;
}

VectorRange::VectorRange(int width) : width_(width) {
  if (width < 1 || width > 64)
    throw std::invalid_argument("VectorRange width must be in [1, 64]");
}

VectorRange::iterator& VectorRange::iterator::operator++() {
  if (width_ == 64) {
    if (value_ == ~std::uint64_t{0})
      done_ = true;
    else
      ++value_;
  } else {
    ++value_;
    if (value_ == (std::uint64_t{1} << width_)) done_ = true;
  }
  return *this;
}

BitVec RankReduction::project_column(const BitVec& d) const {
  if (d.width() != original_width)
    throw std::invalid_argument("project_column: width mismatch");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < pivot_bits.size(); ++i)
    if ((d.mask() >> pivot_bits[i]) & 1) out |= std::uint64_t{1} << i;
  return BitVec(reduced_width, out);
}

BitVec RankReduction::project_coeff(const BitVec& x) const {
  if (x.width() != original_width)
    throw std::invalid_argument("project_coeff: width mismatch");
  std::uint64_t out = 0;
  const std::span<const BitVec> rows = basis.rows();
  const std::size_t r = rows.size();
  for (std::size_t i = 0; i < r; ++i) {
    // rows are in descending pivot order; coordinate i+1 uses pivot i (asc).
    if (dot(x, rows[r - 1 - i]) == 1) out |= std::uint64_t{1} << i;
  }
  return BitVec(reduced_width, out);
}

BitVec RankReduction::lift_coeff(const BitVec& y) const {
  if (y.width() != reduced_width)
    throw std::invalid_argument("lift_coeff: width mismatch");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < pivot_bits.size(); ++i)
    if ((y.mask() >> i) & 1) out |= std::uint64_t{1} << pivot_bits[i];
  return BitVec(original_width, out);
}

RankReduction reduce_to_full_rank(std::span<const BitVec> vectors, int k) {
  RankReduction rr{.original_width = k,
                   .reduced_width = 0,
                   .pivot_bits = {},
                   .basis = EchelonBasis(k),
                   .vectors = {}};
  for (const BitVec& v : vectors) {
    if (v.width() != k)
      throw std::invalid_argument("reduce_to_full_rank: width mismatch");
    rr.basis.insert(v);
  }
  rr.reduced_width = rr.basis.dim();
  if (rr.reduced_width == 0)
    throw std::domain_error("reduce_to_full_rank: span is {0}");
  rr.pivot_bits = rr.basis.pivots();
  std::sort(rr.pivot_bits.begin(), rr.pivot_bits.end());
  rr.vectors.reserve(vectors.size());
  for (const BitVec& v : vectors) rr.vectors.push_back(rr.project_column(v));
  return rr;
}

}  // namespace posetcode

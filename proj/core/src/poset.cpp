#include "posetcode/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace posetcode {

HierarchicalPoset::HierarchicalPoset(int m, int l) : m_(m), l_(l) {
  if (m < 1 || l < 1)
    throw std::invalid_argument("HierarchicalPoset: m and l must be >= 1");
  if (m + l > 64)
    throw std::invalid_argument("HierarchicalPoset: n = m + l must be <= 64");
}

BitVec compose(const HierarchicalPoset& p, const BitVec& beta,
               const BitVec& gamma) {
  if (beta.width() != p.m() || gamma.width() != p.l())
    throw std::invalid_argument("compose: part width mismatch");
  return BitVec(p.n(), beta.mask() | (gamma.mask() << p.m()));
}

BitVec beta_part(const HierarchicalPoset& p, const BitVec& v) {
  if (v.width() != p.n())
    throw std::invalid_argument("beta_part: width mismatch");
  const std::uint64_t lower =
      p.m() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.m()) - 1;
  return BitVec(p.m(), v.mask() & lower);
}

BitVec gamma_part(const HierarchicalPoset& p, const BitVec& v) {
  if (v.width() != p.n())
    throw std::invalid_argument("gamma_part: width mismatch");
  return BitVec(p.l(), v.mask() >> p.m());
}

OrderIdeal::OrderIdeal(BitVec beta, BitVec gamma)
    : beta_(beta), gamma_(gamma) {
  if (!gamma_.is_zero() && !beta_.is_ones())
    throw std::invalid_argument(
        "OrderIdeal: a nonempty upper part requires the full lower level");
}

bool is_order_ideal(const HierarchicalPoset& p, const BitVec& subset) {
  if (subset.width() != p.n())
    throw std::invalid_argument("is_order_ideal: width mismatch");
  return gamma_part(p, subset).is_zero() || beta_part(p, subset).is_ones();
}

OrderIdeal generated_ideal(const HierarchicalPoset& p, const BitVec& e) {
  if (e.width() != p.n())
    throw std::invalid_argument("generated_ideal: width mismatch");
  if (e.is_zero())
    throw std::invalid_argument("generated_ideal: generator set is empty");
  const BitVec gamma = gamma_part(p, e);
  if (gamma.is_zero()) return OrderIdeal(beta_part(p, e), gamma);
  return OrderIdeal(BitVec::ones(p.m()), gamma);
}

namespace {

// Appends (beta', gamma) for every subset beta' of beta, gamma fixed.
void append_lower_subsets(const HierarchicalPoset& p, const BitVec& beta,
                          const BitVec& gamma, std::vector<BitVec>& out) {
  const std::uint64_t mask = beta.mask();
  std::uint64_t s = mask;
  while (true) {
    out.push_back(compose(p, BitVec(p.m(), s), gamma));
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

}  // namespace

std::vector<BitVec> downset(const HierarchicalPoset& p,
                            const OrderIdeal& ideal) {
  std::vector<BitVec> out;
  if (!ideal.has_upper()) {
    append_lower_subsets(p, ideal.beta(), BitVec::zero(p.l()), out);
  } else {
    append_lower_subsets(p, BitVec::ones(p.m()), BitVec::zero(p.l()), out);
    const std::uint64_t b = ideal.gamma().mask();
    for (std::uint64_t s = b; s != 0; s = (s - 1) & b)
      out.push_back(compose(p, BitVec::ones(p.m()), BitVec(p.l(), s)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdealFamily IdealFamily::create(const HierarchicalPoset& p,
                                std::vector<BitVec> b_sets,
                                bool drop_redundant) {
  if (b_sets.empty())
    throw std::invalid_argument("IdealFamily: at least one ideal is required");
  for (const BitVec& b : b_sets) {
    if (b.width() != p.l())
      throw std::invalid_argument("IdealFamily: B-set width differs from l");
    if (b.is_zero())
      throw std::invalid_argument("IdealFamily: B-sets must be nonempty");
  }
  std::sort(b_sets.begin(), b_sets.end());
  b_sets.erase(std::unique(b_sets.begin(), b_sets.end()), b_sets.end());
  if (drop_redundant) {
    std::vector<BitVec> maximal;
    for (const BitVec& b : b_sets) {
      bool dominated = false;
      for (const BitVec& other : b_sets)
        if (other != b && b.subset_of(other)) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(b);
    }
    b_sets = std::move(maximal);
  }
  return IdealFamily(p, std::move(b_sets));
}

std::vector<OrderIdeal> IdealFamily::ideals() const {
  std::vector<OrderIdeal> out;
  out.reserve(b_sets_.size());
  for (const BitVec& b : b_sets_)
    out.emplace_back(BitVec::ones(poset_.m()), b);
  return out;
}

IdealFamily parse_family(const HierarchicalPoset& p, std::string_view text,
                         bool drop_redundant) {
  std::vector<BitVec> b_sets;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view part = text.substr(start, stop - start);
    std::uint64_t mask = 0;
    std::size_t item_start = 0;
    bool any = false;
    while (item_start <= part.size()) {
      std::size_t item_stop = part.find(',', item_start);
      if (item_stop == std::string_view::npos) item_stop = part.size();
      std::string_view item = part.substr(item_start, item_stop - item_start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (!item.empty()) {
        int label = 0;
        for (char c : item) {
          if (c < '0' || c > '9')
            throw std::invalid_argument("family syntax: bad label '" +
                                        std::string(item) + "'");
          label = label * 10 + (c - '0');
          if (label > p.n()) break;
        }
        if (label <= p.m() || label > p.n())
          throw std::invalid_argument(
              "family syntax: label '" + std::string(item) +
              "' is not an upper-level element (expected " +
              std::to_string(p.m() + 1) + ".." + std::to_string(p.n()) + ")");
        mask |= std::uint64_t{1} << (label - p.m() - 1);
        any = true;
      } else if (item_stop != part.size() || any) {
        throw std::invalid_argument("family syntax: empty element label");
      }
      if (item_stop == part.size()) break;
      item_start = item_stop + 1;
    }
    if (!any) throw std::invalid_argument("family syntax: empty ideal");
    b_sets.emplace_back(p.l(), mask);
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return IdealFamily::create(p, std::move(b_sets), drop_redundant);
}

std::string to_text(const IdealFamily& family) {
  const HierarchicalPoset& p = family.poset();
  std::string out;
  bool first_set = true;
  for (const BitVec& b : family.b_sets()) {
    if (!first_set) out += ';';
    first_set = false;
    bool first_item = true;
    for (int j : b.support()) {
      if (!first_item) out += ',';
      first_item = false;
      out += std::to_string(p.m() + j);
    }
  }
  return out;
}

std::vector<BitVec> d0_vectors(const HierarchicalPoset& p) {
  std::vector<BitVec> out;
  const std::uint64_t betas = std::uint64_t{1} << p.m();
  const std::uint64_t gammas = std::uint64_t{1} << p.l();
  out.reserve(static_cast<std::size_t>((betas - 1) * (gammas - 1)));
  const std::uint64_t full_beta = betas - 1;
  for (std::uint64_t g = 1; g < gammas; ++g)
    for (std::uint64_t b = 0; b < betas; ++b) {
      if (b == full_beta) continue;
      out.push_back(compose(p, BitVec(p.m(), b), BitVec(p.l(), g)));
    }
  // gamma-major, beta-minor emission is already ascending in the packed mask.
  return out;
}

DefiningSetBundle defining_sets(const IdealFamily& family) {
  const HierarchicalPoset& p = family.poset();
  DefiningSetBundle bundle{family, d0_vectors(p), {}, {}};

  const std::uint64_t gammas = std::uint64_t{1} << p.l();
  for (std::uint64_t g = 1; g < gammas; ++g) {
    const BitVec gamma(p.l(), g);
    bool contained = false;
    for (const BitVec& b : family.b_sets())
      if (gamma.subset_of(b)) {
        contained = true;
        break;
      }
    if (!contained)
      bundle.d1.push_back(compose(p, BitVec::ones(p.m()), gamma));
  }

  bundle.d.reserve(bundle.d0.size() + bundle.d1.size());
  std::merge(bundle.d0.begin(), bundle.d0.end(), bundle.d1.begin(),
             bundle.d1.end(), std::back_inserter(bundle.d));

  // Cross-check against the complement of the union of the downsets.
  std::vector<BitVec> excluded;
  for (const OrderIdeal& ideal : family.ideals()) {
    std::vector<BitVec> ds = downset(p, ideal);
    excluded.insert(excluded.end(), ds.begin(), ds.end());
  }
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()),
                 excluded.end());
  std::vector<BitVec> complement;
  complement.reserve(bundle.d.size());
  auto it = excluded.begin();
  for (const BitVec v : VectorRange(p.n())) {
    while (it != excluded.end() && *it < v) ++it;
    const bool is_excluded = it != excluded.end() && *it == v;
    if (!v.is_zero() && !is_excluded) complement.push_back(v);
  }
  if (complement != bundle.d)
    throw std::logic_error(
        "defining_sets: split construction disagrees with the downset "
        "complement");
  return bundle;
}

}  // namespace posetcode

#include "posetcode/minimality.hpp"

#include <stdexcept>
#include <string>

namespace posetcode {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::geometric: return "geometric";
    case Method::definitional: return "definitional";
    case Method::ashikhmin_barg: return "ab";
  }
  throw std::logic_error("method_name: bad enum value");
}

std::string_view minimality_name(Minimality verdict) {
  switch (verdict) {
    case Minimality::minimal: return "minimal";
    case Minimality::not_minimal: return "not-minimal";
    case Minimality::inconclusive: return "inconclusive";
  }
  throw std::logic_error("minimality_name: bad enum value");
}

std::vector<BitVec> h_set(const BitVec& y, const DefiningSet& d) {
  if (y.width() != d.k())
    throw std::invalid_argument("h_set: coefficient width differs from k");
  std::vector<BitVec> out;
  for (const BitVec& column : d.columns())
    if (dot(y, column) == 0) out.push_back(column);
  return out;
}

namespace {

void check_definitional_budget(const DefiningSet& d, const Budget& budget,
                               const char* what) {
  if (d.k() > budget.max_k_definitional)
    throw BudgetExceeded(std::string(what) + ": k = " + std::to_string(d.k()) +
                         " exceeds the enumeration budget (max " +
                         std::to_string(budget.max_k_definitional) + ")");
}

void check_geometric_budget(const DefiningSet& d, const Budget& budget,
                            const char* what) {
  if (d.k() > budget.max_k_geometric)
    throw BudgetExceeded(std::string(what) + ": k = " + std::to_string(d.k()) +
                         " exceeds the enumeration budget (max " +
                         std::to_string(budget.max_k_geometric) + ")");
}

void check_full_rank(const DefiningSet& d, const char* what) {
  if (!d.full_rank())
    throw std::invalid_argument(
        std::string(what) + ": the defining set has rank " +
        std::to_string(d.rank()) + " < k = " + std::to_string(d.k()) +
        "; rewrite it with reduce_to_full_rank first");
}

// Incremental cover scan of c(x) against a fixed value c(y): true when
// Suppt(c(x)) is a proper nonzero subset of Suppt(c(y)).
bool strictly_covered(const BitVec& x, const DefiningSet& d, const Bits& cy) {
  bool nonzero = false;
  bool strict = false;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const bool bx = dot(x, d.column(j)) == 1;
    const bool by = cy.test(j);
    if (bx && !by) return false;
    nonzero = nonzero || bx;
    strict = strict || (by && !bx);
  }
  return nonzero && strict;
}

// Representatives of the distinct nonzero codewords with their values.
struct RepTable {
  std::vector<BitVec> reps;
  std::vector<Bits> values;
};

RepTable build_rep_table(const DefiningSet& d) {
  RepTable table;
  const CosetReps reps(d);
  table.reps.reserve(reps.count() > 0 ? reps.count() - 1 : 0);
  for (const BitVec x : reps) {
    if (x.is_zero()) continue;
    table.reps.push_back(x);
    table.values.push_back(codeword(x, d).value);
  }
  return table;
}

// Memory guard for the precomputed table: fall back to rescanning columns
// when the values alone would exceed ~64 MiB.
bool table_fits(const DefiningSet& d) {
  if (d.rank() >= 40) return false;
  const std::uint64_t rows = std::uint64_t{1} << d.rank();
  const std::uint64_t words_per_row = (d.size() + 63) / 64;
  return rows * words_per_row <= (std::uint64_t{1} << 23);
}

std::optional<Witness> find_witness_impl(const DefiningSet& d) {
  if (table_fits(d)) {
    const RepTable table = build_rep_table(d);
    for (std::size_t yi = 0; yi < table.reps.size(); ++yi)
      for (std::size_t xi = 0; xi < table.reps.size(); ++xi) {
        if (xi == yi) continue;
        // Distinct representatives have distinct nonzero values, so a cover
        // here is automatically strict.
        if (table.values[yi].covers(table.values[xi]))
          return Witness{table.reps[yi], table.reps[xi]};
      }
    return std::nullopt;
  }
  const CosetReps reps(d);
  for (const BitVec y : reps) {
    if (y.is_zero()) continue;
    const Bits cy = codeword(y, d).value;
    for (const BitVec x : reps) {
      if (x.is_zero() || x == y) continue;
      if (strictly_covered(x, d, cy)) return Witness{y, x};
    }
  }
  return std::nullopt;
}

}  // namespace

MinimalityVerdict is_minimal_definitional(const BitVec& y,
                                          const DefiningSet& d,
                                          const Budget& budget) {
  if (y.width() != d.k())
    throw std::invalid_argument(
        "is_minimal_definitional: coefficient width differs from k");
  check_definitional_budget(d, budget, "is_minimal_definitional");
  const Bits cy = codeword(y, d).value;
  if (cy.none())
    throw std::domain_error(
        "is_minimal_definitional: c(y) is the zero codeword");
  MinimalityVerdict verdict{Subject::codeword, Method::definitional,
                            Minimality::minimal, y, std::nullopt};
  for (const BitVec x : VectorRange(d.k())) {
    if (strictly_covered(x, d, cy)) {
      verdict.result = Minimality::not_minimal;
      verdict.witness = Witness{y, x};
      return verdict;
    }
  }
  return verdict;
}

MinimalityVerdict is_minimal_geometric(const BitVec& y, const DefiningSet& d,
                                       const Budget& budget) {
  if (y.width() != d.k())
    throw std::invalid_argument(
        "is_minimal_geometric: coefficient width differs from k");
  check_full_rank(d, "is_minimal_geometric");
  check_geometric_budget(d, budget, "is_minimal_geometric");
  if (y.is_zero())
    throw std::domain_error("is_minimal_geometric: c(y) is the zero codeword");
  EchelonBasis span(d.k());
  for (const BitVec& column : d.columns())
    if (dot(y, column) == 0) span.insert(column);
  if (span.dim() > d.k() - 1)
    throw std::logic_error("is_minimal_geometric: H(y, D) spans past y-perp");
  MinimalityVerdict verdict{Subject::codeword, Method::geometric,
                            Minimality::minimal, y, std::nullopt};
  if (span.dim() == d.k() - 1) return verdict;
  // dim < k - 1: the orthogonal complement of the span holds some x outside
  // {0, y}; the first such x certifies the strict cover (full rank makes
  // c injective, so x != 0 and x != y suffice).
  for (const BitVec x : VectorRange(d.k())) {
    if (x.is_zero() || x == y) continue;
    bool orthogonal = true;
    for (const BitVec& row : span.rows())
      if (dot(x, row) == 1) {
        orthogonal = false;
        break;
      }
    if (orthogonal) {
      verdict.result = Minimality::not_minimal;
      verdict.witness = Witness{y, x};
      return verdict;
    }
  }
  throw std::logic_error("is_minimal_geometric: no witness in a deficient span");
}

MinimalityVerdict code_is_minimal(const DefiningSet& d, Method method,
                                  const Budget& budget) {
  MinimalityVerdict verdict{Subject::code, method, Minimality::minimal,
                            std::nullopt, std::nullopt};
  switch (method) {
    case Method::definitional: {
      check_definitional_budget(d, budget, "code_is_minimal");
      if (auto witness = find_witness_impl(d)) {
        verdict.result = Minimality::not_minimal;
        verdict.witness = witness;
      }
      return verdict;
    }
    case Method::geometric: {
      check_full_rank(d, "code_is_minimal");
      check_geometric_budget(d, budget, "code_is_minimal");
      for (const BitVec y : VectorRange(d.k())) {
        if (y.is_zero()) continue;
        MinimalityVerdict one = is_minimal_geometric(y, d, budget);
        if (one.result == Minimality::not_minimal) {
          verdict.result = Minimality::not_minimal;
          verdict.witness = one.witness;
          return verdict;
        }
      }
      return verdict;
    }
    case Method::ashikhmin_barg:
      return ashikhmin_barg_check(d, budget);
  }
  throw std::logic_error("code_is_minimal: bad method value");
}

MinimalityVerdict code_is_minimal_reducing(const DefiningSet& d, Method method,
                                           const Budget& budget) {
  if (method != Method::geometric || d.full_rank())
    return code_is_minimal(d, method, budget);
  if (d.rank() == 0) {
    // Only the zero codeword exists; minimal by vacuity.
    return MinimalityVerdict{Subject::code, method, Minimality::minimal,
                             std::nullopt, std::nullopt};
  }
  const RankReduction rr = reduce_to_full_rank(d.columns(), d.k());
  const DefiningSet reduced =
      DefiningSet::from_vectors(rr.reduced_width, rr.vectors);
  MinimalityVerdict verdict = code_is_minimal(reduced, method, budget);
  if (verdict.witness) {
    verdict.witness = Witness{rr.lift_coeff(verdict.witness->u),
                              rr.lift_coeff(verdict.witness->v)};
    if (!validate_witness(d, *verdict.witness))
      throw std::logic_error(
          "code_is_minimal_reducing: lifted witness fails validation");
  }
  return verdict;
}

MinimalityVerdict ashikhmin_barg_check(const DefiningSet& d,
                                       const Budget& budget) {
  const WeightDistribution wd = weight_distribution(d, budget);
  MinimalityVerdict verdict{Subject::code, Method::ashikhmin_barg,
                            Minimality::minimal, std::nullopt, std::nullopt};
  if (wd.empty()) return verdict;  // no nonzero codewords
  if (2 * wd.w_min > wd.w_max) return verdict;
  verdict.result = Minimality::inconclusive;
  return verdict;
}

std::optional<Witness> find_witness(const DefiningSet& d,
                                    const Budget& budget) {
  check_definitional_budget(d, budget, "find_witness");
  return find_witness_impl(d);
}

bool validate_witness(const DefiningSet& d, const Witness& witness) {
  const Codeword cu = codeword(witness.u, d);
  const Codeword cv = codeword(witness.v, d);
  return cu.value.any() && cv.value.any() && cv.value != cu.value &&
         covers(cu, cv);
}

}  // namespace posetcode

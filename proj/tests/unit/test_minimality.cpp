#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "posetcode/minimality.hpp"
#include "posetcode/poset.hpp"

using namespace posetcode;

namespace {

DefiningSet d0_set(int m, int l) {
  const HierarchicalPoset p(m, l);
  return DefiningSet::from_vectors(p.n(), d0_vectors(p));
}

DefiningSet family_set(int m, int l, const char* ideals) {
  const HierarchicalPoset p(m, l);
  return DefiningSet::from_vectors(
      p.n(), defining_sets(parse_family(p, ideals)).d);
}

DefiningSet from_masks(int k, std::vector<std::uint64_t> values) {
  std::vector<BitVec> columns;
  columns.reserve(values.size());
  for (std::uint64_t v : values) columns.emplace_back(k, v);
  return DefiningSet::from_vectors(k, std::move(columns));
}

std::vector<BitVec> columns_of(const DefiningSet& d) {
  return {d.columns().begin(), d.columns().end()};
}

DefiningSet random_full_rank(std::mt19937_64& rng, int k) {
  while (true) {
    const std::uint64_t top = (std::uint64_t{1} << k) - 1;
    std::vector<BitVec> columns;
    const int count = k + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i)
      columns.emplace_back(k, 1 + rng() % top);
    const DefiningSet d = DefiningSet::from_vectors(k, std::move(columns));
    if (d.full_rank()) return d;
  }
}

}  // namespace

TEST_CASE("names are stable") {
  CHECK(method_name(Method::geometric) == "geometric");
  CHECK(method_name(Method::definitional) == "definitional");
  CHECK(method_name(Method::ashikhmin_barg) == "ab");
  CHECK(minimality_name(Minimality::minimal) == "minimal");
  CHECK(minimality_name(Minimality::not_minimal) == "not-minimal");
  CHECK(minimality_name(Minimality::inconclusive) == "inconclusive");
}

TEST_CASE("h_set filters the orthogonal columns in canonical order") {
  const DefiningSet simplex = from_masks(2, {1, 2, 3});
  const std::vector<BitVec> h = h_set(BitVec::from_string("10"), simplex);
  REQUIRE(h.size() == 1);
  CHECK(h[0].mask() == 2);
  CHECK(h_set(BitVec::zero(2), simplex).size() == 3);
  CHECK_THROWS_AS(h_set(BitVec::zero(3), simplex), std::invalid_argument);

  const DefiningSet d = d0_set(2, 2);
  for (const BitVec y : VectorRange(4)) {
    const std::vector<BitVec> hy = h_set(y, d);
    CHECK(std::is_sorted(hy.begin(), hy.end()));
    for (const BitVec& c : hy) CHECK(dot(y, c) == 0);
  }
}

TEST_CASE("definitional codeword check matches the oracle") {
  const std::vector<DefiningSet> sets{
      from_masks(2, {1, 2, 3}), from_masks(3, {1, 2, 4}), d0_set(2, 2),
      d0_set(2, 1), family_set(2, 2, "3"), family_set(1, 3, "2,3")};
  for (const DefiningSet& d : sets) {
    const std::vector<BitVec> columns = columns_of(d);
    for (const BitVec y : VectorRange(d.k())) {
      if (codeword(y, d).value.none()) continue;
      const MinimalityVerdict verdict = is_minimal_definitional(y, d);
      CHECK((verdict.result == Minimality::minimal) ==
            oracles::codeword_minimal(y, d.k(), columns));
      CHECK(verdict.subject == Subject::codeword);
      CHECK(verdict.y == y);
      if (verdict.result == Minimality::not_minimal) {
        REQUIRE(verdict.witness.has_value());
        CHECK(verdict.witness->u == y);
        CHECK(validate_witness(d, *verdict.witness));
      }
    }
  }
}

TEST_CASE("definitional check rejects the zero codeword") {
  const DefiningSet d = d0_set(1, 2);  // rank 2 < k = 3
  CHECK_THROWS_AS(is_minimal_definitional(BitVec::from_string("100"), d),
                  std::domain_error);
}

TEST_CASE("geometric codeword check needs full rank") {
  const DefiningSet deficient = d0_set(1, 2);
  CHECK_THROWS_AS(
      is_minimal_geometric(BitVec::from_string("010"), deficient),
      std::invalid_argument);
  const DefiningSet d = d0_set(2, 2);
  CHECK_THROWS_AS(is_minimal_geometric(BitVec::zero(4), d),
                  std::domain_error);
}

TEST_CASE("geometric and definitional agree codeword by codeword") {
  std::mt19937_64 rng(77);
  std::vector<DefiningSet> sets{d0_set(2, 2), d0_set(2, 1),
                                family_set(2, 2, "3"),
                                family_set(1, 3, "2,3")};
  for (int round = 0; round < 25; ++round)
    sets.push_back(random_full_rank(rng, 2 + static_cast<int>(rng() % 5)));
  for (const DefiningSet& d : sets) {
    if (!d.full_rank()) continue;
    for (const BitVec y : VectorRange(d.k())) {
      if (y.is_zero()) continue;
      const MinimalityVerdict geo = is_minimal_geometric(y, d);
      const MinimalityVerdict def = is_minimal_definitional(y, d);
      CHECK(geo.result == def.result);
      if (geo.result == Minimality::not_minimal) {
        REQUIRE(geo.witness.has_value());
        REQUIRE(def.witness.has_value());
        CHECK(geo.witness->u == def.witness->u);
        CHECK(geo.witness->v == def.witness->v);
        CHECK(validate_witness(d, *geo.witness));
      }
    }
  }
}

TEST_CASE("geometric criterion is the hyperplane dimension") {
  const DefiningSet d = family_set(2, 2, "3");
  for (const BitVec y : VectorRange(4)) {
    if (y.is_zero()) continue;
    const std::vector<BitVec> hy = h_set(y, d);
    const bool minimal =
        is_minimal_geometric(y, d).result == Minimality::minimal;
    CHECK(minimal == (oracles::rank_of(hy) == d.k() - 1));
  }
}

TEST_CASE("code-level checks find the canonical-first witness") {
  const DefiningSet d22 = d0_set(2, 2);
  for (const Method method : {Method::geometric, Method::definitional}) {
    const MinimalityVerdict verdict = code_is_minimal(d22, method);
    CHECK(verdict.result == Minimality::not_minimal);
    CHECK(verdict.subject == Subject::code);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->u.to_string() == "1100");
    CHECK(verdict.witness->v.to_string() == "1000");
  }

  const DefiningSet d21 = d0_set(2, 1);
  const auto witness = find_witness(d21);
  REQUIRE(witness.has_value());
  CHECK(witness->u.to_string() == "110");
  CHECK(witness->v.to_string() == "100");

  CHECK(code_is_minimal(family_set(3, 2, "4"), Method::geometric).result ==
        Minimality::minimal);
  CHECK(code_is_minimal(family_set(3, 2, "4"), Method::definitional).result ==
        Minimality::minimal);
  CHECK_FALSE(find_witness(family_set(3, 2, "4")).has_value());
}

TEST_CASE("code-level checks agree with the whole-code oracle") {
  std::mt19937_64 rng(88);
  for (int round = 0; round < 40; ++round) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const DefiningSet d = random_full_rank(rng, k);
    const bool expected = oracles::code_minimal(k, columns_of(d));
    CHECK((code_is_minimal(d, Method::definitional).result ==
           Minimality::minimal) == expected);
    CHECK((code_is_minimal(d, Method::geometric).result ==
           Minimality::minimal) == expected);
  }
}

TEST_CASE("the reducing wrapper lifts witnesses back") {
  // The deficient direction: a width-4 embedding that never uses bit 3.
  const DefiningSet embedded = from_masks(4, {4, 5, 6});
  CHECK(embedded.rank() == 3);
  const MinimalityVerdict verdict =
      code_is_minimal_reducing(embedded, Method::geometric);
  CHECK(verdict.result == Minimality::not_minimal);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->u.to_string() == "1100");
  CHECK(verdict.witness->v.to_string() == "1000");
  CHECK(validate_witness(embedded, *verdict.witness));

  const DefiningSet deficient_minimal = d0_set(1, 2);
  CHECK(code_is_minimal_reducing(deficient_minimal, Method::geometric)
            .result == Minimality::minimal);
  CHECK(code_is_minimal_reducing(deficient_minimal, Method::definitional)
            .result == Minimality::minimal);

  const DefiningSet zero_only = from_masks(2, {0});
  CHECK(code_is_minimal_reducing(zero_only, Method::geometric).result ==
        Minimality::minimal);

  // Full-rank input passes straight through.
  const DefiningSet d = d0_set(2, 2);
  const MinimalityVerdict direct =
      code_is_minimal_reducing(d, Method::geometric);
  CHECK(direct.result == Minimality::not_minimal);
  CHECK(direct.witness->u.to_string() == "1100");
}

TEST_CASE("the weight-range condition is one sided") {
  CHECK(ashikhmin_barg_check(from_masks(2, {1, 2, 3})).result ==
        Minimality::minimal);
  CHECK(ashikhmin_barg_check(from_masks(3, {1, 2, 4})).result ==
        Minimality::inconclusive);
  CHECK(ashikhmin_barg_check(family_set(2, 2, "3")).result ==
        Minimality::minimal);
  CHECK(ashikhmin_barg_check(from_masks(2, {0})).result ==
        Minimality::minimal);
  CHECK(code_is_minimal(d0_set(2, 2), Method::ashikhmin_barg).result ==
        Minimality::inconclusive);

  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const DefiningSet d = random_full_rank(rng, k);
    if (ashikhmin_barg_check(d).result == Minimality::minimal)
      CHECK(oracles::code_minimal(k, columns_of(d)));
  }
}

TEST_CASE("validate_witness checks every certificate condition") {
  const DefiningSet d = d0_set(2, 1);
  CHECK(validate_witness(
      d, Witness{BitVec::from_string("110"), BitVec::from_string("100")}));
  CHECK(validate_witness(
      d, Witness{BitVec::from_string("001"), BitVec::from_string("111")}));
  CHECK_FALSE(validate_witness(
      d, Witness{BitVec::from_string("100"), BitVec::from_string("110")}));
  CHECK_FALSE(validate_witness(
      d, Witness{BitVec::from_string("110"), BitVec::from_string("110")}));
  CHECK_FALSE(validate_witness(
      d, Witness{BitVec::from_string("110"), BitVec::from_string("000")}));
}

TEST_CASE("enumeration budgets refuse up front") {
  std::vector<BitVec> wide;
  for (int i = 1; i <= 17; ++i) wide.push_back(BitVec::unit(17, i));
  const DefiningSet d17 = DefiningSet::from_vectors(17, wide);
  CHECK_THROWS_AS(code_is_minimal(d17, Method::definitional),
                  BudgetExceeded);
  CHECK_THROWS_AS(find_witness(d17), BudgetExceeded);
  CHECK_THROWS_AS(is_minimal_definitional(BitVec::unit(17, 1), d17),
                  BudgetExceeded);

  std::vector<BitVec> wider;
  for (int i = 1; i <= 25; ++i) wider.push_back(BitVec::unit(25, i));
  const DefiningSet d25 = DefiningSet::from_vectors(25, wider);
  CHECK_THROWS_AS(code_is_minimal(d25, Method::geometric), BudgetExceeded);

  Budget tight;
  tight.max_k_definitional = 1;
  tight.max_k_geometric = 1;
  const DefiningSet small = from_masks(2, {1, 2, 3});
  CHECK_THROWS_AS(code_is_minimal(small, Method::definitional, tight),
                  BudgetExceeded);
  CHECK_THROWS_AS(code_is_minimal(small, Method::geometric, tight),
                  BudgetExceeded);
  CHECK_THROWS_AS(code_is_minimal(small, Method::ashikhmin_barg, tight),
                  BudgetExceeded);
}

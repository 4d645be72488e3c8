#include "posetcode/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace posetcode {

std::string_view set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::d0: return "d0";
    case SetKind::d: return "d";
  }
  throw std::logic_error("set_kind_name: bad enum value");
}

std::string_view case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::t32_1: return "T32.1";
    case CaseLabel::t32_2: return "T32.2";
    case CaseLabel::t32_3: return "T32.3";
    case CaseLabel::t32_4: return "T32.4";
    case CaseLabel::t33_1: return "T33.1";
    case CaseLabel::t33_2: return "T33.2";
    case CaseLabel::t33_3: return "T33.3";
    case CaseLabel::t33_4i: return "T33.4i";
    case CaseLabel::t33_4ii: return "T33.4ii";
    case CaseLabel::t33_4iii: return "T33.4iii";
  }
  throw std::logic_error("case_label_name: bad enum value");
}

Prediction predict_d0(int m, int l) {
  HierarchicalPoset p(m, l);  // validates the parameters
  if (m == 1) return {CaseLabel::t32_4, true, ""};
  if (l == 1) return {CaseLabel::t32_3, false, ""};
  if (m == 2) return {CaseLabel::t32_2, false, ""};
  return {CaseLabel::t32_1, true, ""};
}

namespace {

int max_b_weight(std::span<const BitVec> b_sets) {
  int best = 0;
  for (const BitVec& b : b_sets) best = std::max(best, b.weight());
  return best;
}

std::string b_condition(int bmax, int l) {
  return "max|B_i|=" + std::to_string(bmax) + " l=" + std::to_string(l);
}

}  // namespace

Prediction predict_d(int m, int l, std::span<const BitVec> b_sets) {
  HierarchicalPoset p(m, l);
  if (b_sets.empty())
    throw std::invalid_argument("predict_d: at least one ideal is required");
  for (const BitVec& b : b_sets) {
    if (b.width() != l)
      throw std::invalid_argument("predict_d: B-set width differs from l");
    if (b.is_zero())
      throw std::invalid_argument("predict_d: B-sets must be nonempty");
  }
  const int bmax = max_b_weight(b_sets);
  if (m == 1) {
    const std::string cond = b_condition(bmax, l);
    if (bmax == l) return {CaseLabel::t33_4i, true, cond};
    if (bmax == l - 1) return {CaseLabel::t33_4ii, false, cond};
    return {CaseLabel::t33_4iii, true, cond};
  }
  if (l == 1) return {CaseLabel::t33_3, false, ""};
  if (m == 2)
    return {CaseLabel::t33_2, bmax < l, b_condition(bmax, l)};
  return {CaseLabel::t33_1, true, ""};
}

bool InstanceResult::mismatched() const {
  for (const MethodOutcome& outcome : outcomes) {
    if (!outcome.result) continue;
    if (*outcome.result == Minimality::inconclusive) continue;
    const bool decided_minimal = *outcome.result == Minimality::minimal;
    if (decided_minimal != prediction.minimal) return true;
  }
  return false;
}

std::string InstanceResult::ideals_text() const {
  if (kind == SetKind::d0 || b_sets.empty()) return "";
  return to_text(IdealFamily::create(HierarchicalPoset(m, l), b_sets));
}

namespace {

DefiningSet instance_set(const HierarchicalPoset& p,
                         std::span<const BitVec> b_sets, SetKind kind,
                         const Prediction& prediction) {
  if (kind == SetKind::d0)
    return DefiningSet::from_vectors(p.n(), d0_vectors(p));
  IdealFamily family =
      IdealFamily::create(p, std::vector<BitVec>(b_sets.begin(), b_sets.end()));
  DefiningSetBundle bundle = defining_sets(family);
  const bool expect_d0_only = prediction.label == CaseLabel::t33_3 ||
                              prediction.label == CaseLabel::t33_4i;
  if (expect_d0_only && (!bundle.d1.empty() || bundle.d != bundle.d0))
    throw std::logic_error(
        "verify_instance: the family-dependent part contradicts the case "
        "analysis");
  return DefiningSet::from_vectors(p.n(), bundle.d);
}

}  // namespace

InstanceResult verify_instance(int m, int l, std::span<const BitVec> b_sets,
                               SetKind kind, std::span<const Method> methods,
                               const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  const HierarchicalPoset p(m, l);
  InstanceResult row;
  row.m = m;
  row.l = l;
  row.kind = kind;
  if (kind == SetKind::d) {
    IdealFamily family = IdealFamily::create(
        p, std::vector<BitVec>(b_sets.begin(), b_sets.end()));
    row.b_sets.assign(family.b_sets().begin(), family.b_sets().end());
    row.prediction = predict_d(m, l, row.b_sets);
  } else {
    if (!b_sets.empty())
      throw std::invalid_argument(
          "verify_instance: kind d0 takes no ideal family");
    row.prediction = predict_d0(m, l);
  }
  const DefiningSet d = instance_set(p, row.b_sets, kind, row.prediction);
  for (const Method method : methods) {
    MethodOutcome outcome{method, std::nullopt, ""};
    try {
      MinimalityVerdict verdict = code_is_minimal_reducing(d, method, budget);
      outcome.result = verdict.result;
      if (verdict.result == Minimality::not_minimal && !row.witness) {
        if (!verdict.witness || !validate_witness(d, *verdict.witness))
          throw std::logic_error(
              "verify_instance: not-minimal verdict without a valid witness");
        row.witness = verdict.witness;
      }
    } catch (const BudgetExceeded& e) {
      outcome.note = e.what();
    }
    row.outcomes.push_back(std::move(outcome));
  }
  row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return row;
}

BitVec permute_coords(const BitVec& v, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != v.width())
    throw std::invalid_argument("permute_coords: permutation size mismatch");
  std::uint64_t out = 0;
  for (int i = 0; i < v.width(); ++i)
    if ((v.mask() >> i) & 1) out |= std::uint64_t{1} << perm[i];
  return BitVec(v.width(), out);
}

std::vector<BitVec> canonical_family_form(int l,
                                          std::span<const BitVec> b_sets) {
  std::vector<BitVec> best(b_sets.begin(), b_sets.end());
  std::sort(best.begin(), best.end());
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BitVec> image;
  image.reserve(best.size());
  do {
    image.clear();
    for (const BitVec& b : b_sets) image.push_back(permute_coords(b, perm));
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool family_is_canonical(int l, std::span<const BitVec> b_sets) {
  std::vector<BitVec> sorted(b_sets.begin(), b_sets.end());
  std::sort(sorted.begin(), sorted.end());
  return canonical_family_form(l, b_sets) == sorted;
}

std::vector<std::vector<BitVec>> canonical_families(int l, int t_max) {
  if (l < 1 || l > 20)
    throw std::invalid_argument("canonical_families: l out of range");
  if (t_max < 1)
    throw std::invalid_argument("canonical_families: t_max must be >= 1");
  const std::uint64_t top = (std::uint64_t{1} << l) - 1;
  std::vector<std::vector<BitVec>> out;
  std::vector<BitVec> current;
  // Depth-first over ascending mask combinations, emitted in
  // subset-lexicographic order. Every prefix of a canonical family is
  // canonical (a permutation shrinking the sorted prefix would shrink the
  // sorted family), so non-canonical prefixes are pruned whole.
  auto extend = [&](auto&& self, std::uint64_t next_mask) -> void {
    for (std::uint64_t mask = next_mask; mask <= top; ++mask) {
      current.emplace_back(l, mask);
      if (family_is_canonical(l, current)) {
        out.push_back(current);
        if (static_cast<int>(current.size()) < t_max) self(self, mask + 1);
      }
      current.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

SweepReport sweep(const SweepOptions& options) {
  if (options.m_min < 1 || options.l_min < 1 ||
      options.m_min > options.m_max || options.l_min > options.l_max)
    throw std::invalid_argument("sweep: bad parameter ranges");
  if (options.kinds.empty() || options.methods.empty())
    throw std::invalid_argument("sweep: kinds and methods must be nonempty");
  SweepReport report;
  report.options = options;
  for (int m = options.m_min; m <= options.m_max; ++m) {
    for (int l = options.l_min; l <= options.l_max; ++l) {
      if (m + l > options.n_max) continue;
      std::vector<std::vector<BitVec>> families;
      bool families_built = false;
      for (const SetKind kind : options.kinds) {
        if (kind == SetKind::d0) {
          report.instances.push_back(verify_instance(
              m, l, {}, SetKind::d0, options.methods, options.budget));
          continue;
        }
        if (!families_built) {
          families = canonical_families(l, options.t_max);
          families_built = true;
        }
        for (const std::vector<BitVec>& family : families)
          report.instances.push_back(verify_instance(
              m, l, family, SetKind::d, options.methods, options.budget));
      }
    }
  }
  for (std::size_t i = 0; i < report.instances.size(); ++i)
    if (report.instances[i].mismatched()) report.mismatches.push_back(i);
  return report;
}

namespace {

WitnessCheck run_witness_check(std::string case_label, int m, int l,
                               SetKind kind, const std::string& ideals,
                               const Witness& witness, bool require_h_empty) {
  WitnessCheck check;
  check.case_label = std::move(case_label);
  check.m = m;
  check.l = l;
  check.kind = kind;
  check.ideals = ideals;
  check.witness = witness;
  check.require_h_empty = require_h_empty;

  const HierarchicalPoset p(m, l);
  DefiningSet d = [&] {
    if (kind == SetKind::d0)
      return DefiningSet::from_vectors(p.n(), d0_vectors(p));
    return DefiningSet::from_vectors(
        p.n(), defining_sets(parse_family(p, ideals)).d);
  }();

  const std::vector<BitVec> hu = h_set(witness.u, d);
  const std::vector<BitVec> hv = h_set(witness.v, d);
  check.h_subset = std::includes(hv.begin(), hv.end(), hu.begin(), hu.end());
  check.h_empty = hu.empty();
  const Codeword cu = codeword(witness.u, d);
  const Codeword cv = codeword(witness.v, d);
  check.cover_holds = covers(cu, cv);
  check.u_nonzero = cu.value.any();
  check.v_nonzero = cv.value.any();
  check.v_distinct = cv.value != cu.value;
  check.passed = check.h_subset && check.cover_holds && check.u_nonzero &&
                 check.v_nonzero && check.v_distinct &&
                 (!check.require_h_empty || check.h_empty) &&
                 validate_witness(d, witness);
  return check;
}

}  // namespace

WitnessReport verify_known_witnesses() {
  WitnessReport report;
  // Lower level of size two, upper of size two: c(u) for the full lower
  // part is strictly covered by a single lower generator.
  report.cases.push_back(run_witness_check(
      "T32.2", 2, 2, SetKind::d0, "",
      Witness{BitVec::from_string("1100"), BitVec::from_string("1000")},
      false));
  // Single upper element: H(u, D0) is empty, so every codeword covers c(u).
  report.cases.push_back(run_witness_check(
      "T32.3", 2, 1, SetKind::d0, "",
      Witness{BitVec::from_string("001"), BitVec::from_string("111")}, true));
  // One lower element, B one short of the full upper level: the coordinate
  // outside B separates u from v.
  report.cases.push_back(run_witness_check(
      "T33.4ii", 1, 3, SetKind::d, "2,3",
      Witness{BitVec::from_string("0001"), BitVec::from_string("1001")},
      false));
  report.all_passed = std::all_of(report.cases.begin(), report.cases.end(),
                                  [](const WitnessCheck& c) { return c.passed; });
  return report;
}

}  // namespace posetcode

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetcode/budget.hpp"
#include "posetcode/minimality.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

/// Which defining set an instance checks: the family-independent part D0 or
/// the full set D.
enum class SetKind { d0, d };
std::string_view set_kind_name(SetKind kind);

/// Classification case identifiers for the built-in prediction table.
enum class CaseLabel {
  t32_1,
  t32_2,
  t32_3,
  t32_4,
  t33_1,
  t33_2,
  t33_3,
  t33_4i,
  t33_4ii,
  t33_4iii,
};
std::string_view case_label_name(CaseLabel label);

/// Predicted answer for an instance, with the classification case that
/// produced it; conditional cases also record the evaluated condition.
struct Prediction {
  CaseLabel label;
  bool minimal;
  std::string condition;
};

/// Prediction for the code generated by D0(m, l).
Prediction predict_d0(int m, int l);
/// Prediction for the code generated by D(m, l, B_1..B_t); the B-sets are
/// upper parts of width l.
Prediction predict_d(int m, int l, std::span<const BitVec> b_sets);

/// Outcome of one checker on one instance; `result` is empty when the
/// checker refused (enumeration budget), with the reason in `note`.
struct MethodOutcome {
  Method method;
  std::optional<Minimality> result;
  std::string note;
};

struct InstanceResult {
  int m = 0;
  int l = 0;
  SetKind kind = SetKind::d;
  std::vector<BitVec> b_sets;  // canonical; empty for kind d0
  Prediction prediction{CaseLabel::t32_1, true, ""};
  std::vector<MethodOutcome> outcomes;
  std::optional<Witness> witness;  // width-n coefficients, validated
  std::int64_t micros = 0;

  /// True when a decisive checker result contradicts the prediction.
  bool mismatched() const;
  /// Family text for reports; empty for kind d0.
  std::string ideals_text() const;
};

/// Builds the requested defining set, runs each checker (rewriting to
/// full-rank coordinates for the geometric checker when needed, with the
/// witness lifted back), validates any witness, and compares against the
/// prediction. For the cases whose D has an empty family-dependent part the
/// set-level identity D = D0 is asserted.
InstanceResult verify_instance(int m, int l, std::span<const BitVec> b_sets,
                               SetKind kind, std::span<const Method> methods,
                               const Budget& budget = {});

struct SweepOptions {
  int m_min = 1;
  int m_max = 5;
  int l_min = 1;
  int l_max = 5;
  int n_max = 10;
  int t_max = 3;
  std::vector<SetKind> kinds = {SetKind::d0, SetKind::d};
  std::vector<Method> methods = {Method::geometric, Method::definitional,
                                 Method::ashikhmin_barg};
  Budget budget;
};

struct SweepReport {
  SweepOptions options;
  std::vector<InstanceResult> instances;
  std::vector<std::size_t> mismatches;  // indices into instances
};

/// Runs every instance in the requested ranges: for each (m, l) one d0 row
/// (the set does not depend on the family) and one d row per canonical
/// family with at most t_max ideals. Instance order is deterministic.
SweepReport sweep(const SweepOptions& options = {});

/// Image of an upper part under a coordinate permutation of [l];
/// perm[i] is the 0-based image of 0-based position i.
BitVec permute_coords(const BitVec& v, std::span<const int> perm);
/// Orbit minimum of a family under simultaneous coordinate permutations,
/// compared as sorted mask sequences.
std::vector<BitVec> canonical_family_form(int l, std::span<const BitVec> b_sets);
bool family_is_canonical(int l, std::span<const BitVec> b_sets);
/// All canonical families over [l] with 1..t_max distinct nonempty B-sets,
/// in deterministic (subset-lexicographic) order.
std::vector<std::vector<BitVec>> canonical_families(int l, int t_max);

/// One fixed non-minimality certificate reproduced at its smallest instance,
/// with every validated property recorded.
struct WitnessCheck {
  std::string case_label;
  int m = 0;
  int l = 0;
  SetKind kind = SetKind::d0;
  std::string ideals;
  Witness witness{BitVec::zero(1), BitVec::zero(1)};
  bool h_subset = false;    // H(u, D) contained in H(v, D)
  bool cover_holds = false; // c(v) covered by c(u)
  bool u_nonzero = false;
  bool v_nonzero = false;
  bool v_distinct = false;  // c(v) != c(u)
  bool h_empty = false;     // observed H(u, D) == {}
  bool require_h_empty = false;
  bool passed = false;
};

struct WitnessReport {
  std::vector<WitnessCheck> cases;
  bool all_passed = false;
};

/// Replays the catalogued witnesses for the three not-minimal cases at
/// their smallest instances and validates each property.
WitnessReport verify_known_witnesses();

}  // namespace posetcode

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "posetcode/budget.hpp"
#include "posetcode/code.hpp"
#include "posetcode/gf2.hpp"

namespace posetcode {

enum class Method { geometric, definitional, ashikhmin_barg };
/// Stable identifier used in reports and on the command line:
/// "geometric", "definitional", "ab".
std::string_view method_name(Method method);

enum class Minimality { minimal, not_minimal, inconclusive };
std::string_view minimality_name(Minimality verdict);

enum class Subject { codeword, code };

/// Certificate of non-minimality: c(v) is a nonzero codeword strictly
/// covered by c(u).
struct Witness {
  BitVec u;
  BitVec v;
};

struct MinimalityVerdict {
  Subject subject = Subject::code;
  Method method = Method::definitional;
  Minimality result = Minimality::inconclusive;
  /// Coefficient vector of the examined codeword, for codeword subjects.
  std::optional<BitVec> y;
  /// Present exactly when result is not_minimal; validates against the
  /// defining set that was checked.
  std::optional<Witness> witness;
};

/// The columns of D orthogonal to y, in canonical order: H(y, D).
std::vector<BitVec> h_set(const BitVec& y, const DefiningSet& d);

/// Brute-force cover scan for one codeword: c(y) is minimal iff no x has
/// 0 != c(x) strictly covered by c(y). Requires c(y) != 0; refuses when k
/// exceeds the definitional budget. Any rank is accepted.
MinimalityVerdict is_minimal_definitional(const BitVec& y,
                                          const DefiningSet& d,
                                          const Budget& budget = {});

/// Rank criterion for one codeword of a full-rank defining set: c(y) is
/// minimal iff the span of H(y, D) has dimension k - 1. Rank-deficient
/// defining sets are rejected; rewrite them with reduce_to_full_rank first.
MinimalityVerdict is_minimal_geometric(const BitVec& y, const DefiningSet& d,
                                       const Budget& budget = {});

/// Whole-code check over one representative per distinct nonzero codeword.
/// For a negative answer the witness is the first pair in canonical order
/// of (u, then v). Method ashikhmin_barg gives the sufficient-condition
/// verdict (never not_minimal).
MinimalityVerdict code_is_minimal(const DefiningSet& d, Method method,
                                  const Budget& budget = {});

/// Same as code_is_minimal, but a rank-deficient defining set is rewritten
/// in full-rank coordinates first and any witness is lifted back, so the
/// verdict and certificate always refer to the original coefficients.
MinimalityVerdict code_is_minimal_reducing(const DefiningSet& d, Method method,
                                           const Budget& budget = {});

/// Sufficient condition on the weight range: w_min / w_max > 1/2 forces
/// minimality. Never answers not_minimal.
MinimalityVerdict ashikhmin_barg_check(const DefiningSet& d,
                                       const Budget& budget = {});

/// First witness pair (u, v) in canonical order of (u, then v), or nothing
/// when the code is minimal.
std::optional<Witness> find_witness(const DefiningSet& d,
                                    const Budget& budget = {});

/// Checks the certificate: c(u) != 0, c(v) not in {0, c(u)}, and c(v)
/// covered by c(u).
bool validate_witness(const DefiningSet& d, const Witness& witness);

}  // namespace posetcode

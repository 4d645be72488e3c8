#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace posetcode {

/// Enumeration caps for the exhaustive checkers. A check whose dimension
/// exceeds its cap refuses to run instead of silently taking hours.
struct Budget {
  int max_k_definitional = 16;
  int max_k_geometric = 24;
};

/// Thrown when a requested check would exceed its enumeration budget.
/// scanned() reports how many candidates were examined before refusal
/// (zero when the refusal is decided up front).
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what, std::uint64_t scanned = 0)
      : std::runtime_error(what), scanned_(scanned) {}
  std::uint64_t scanned() const { return scanned_; }

 private:
  std::uint64_t scanned_;
};

}  // namespace posetcode

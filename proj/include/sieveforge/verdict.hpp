#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sieveforge {

/// Structured counterexample attached to a failed check or a thrown Error.
/// Every failing checker leaves enough data here to replay the violated
/// axiom on its own output.
struct Witness {
  std::string axiom;
  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> sieves;
  std::vector<std::string> morphisms;
  std::string detail;
};

struct Verdict {
  bool pass = true;
  std::optional<Witness> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return pass; }
};

/// Single exception type; `code()` carries the contract-level error name
/// ("NotALattice", "BudgetExceeded", "CarrierMismatch", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, Witness witness = {})
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const Witness& witness() const { return witness_; }

 private:
  std::string code_;
  Witness witness_;
};

}  // namespace sieveforge

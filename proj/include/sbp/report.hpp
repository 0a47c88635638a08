#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sbp {

// One broken law instance: the law as a formula string plus the named
// elements it fails at, e.g. {"a", 3}.
struct Violation {
  std::string law;
  std::vector<std::pair<std::string, int>> witness;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.law == b.law && a.witness == b.witness;
  }
};

// Outcome of checking a family of equational laws on a finite structure.
// Empty means every instance holds. Witness lists are complete per law
// unless a checker documents truncation.
class VerificationReport {
 public:
  bool passed() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string law,
           std::vector<std::pair<std::string, int>> witness) {
    violations_.push_back({std::move(law), std::move(witness)});
  }

  // Violations of one specific law, in discovery order.
  std::vector<Violation> for_law(const std::string& law) const {
    std::vector<Violation> out;
    for (const auto& v : violations_)
      if (v.law == law) out.push_back(v);
    return out;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace sbp

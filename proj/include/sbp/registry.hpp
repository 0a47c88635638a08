#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbp/monoid.hpp"

namespace sbp {

// Named monoid tables usable wherever a document expects a monoid. Starts
// with the built-ins:
//   T  trivial monoid
//   M  two-element idempotent monoid (1+1 = 1)
//   G  two-element group
//   Z3 cyclic group of order 3
//   Z4 cyclic group of order 4
// Extra names can be seeded from a JSON document of {"name": monoid-doc}.
class Registry {
 public:
  Registry();

  const MonoidTable& get(const std::string& name) const;  // UnknownName
  bool contains(const std::string& name) const;
  // First registered name whose table equals m, if any.
  std::optional<std::string> name_of(const MonoidTable& m) const;
  // Registration order; built-ins first.
  const std::vector<std::string>& names() const { return order_; }

  void add(const std::string& name, MonoidTable m);

 private:
  std::vector<std::string> order_;
  std::vector<MonoidTable> tables_;
};

}  // namespace sbp

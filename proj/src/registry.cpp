#include "sbp/registry.hpp"

#include <algorithm>

namespace sbp {

Registry::Registry() {
  add("T", make_monoid({{0}}));
  add("M", make_monoid({{0, 1}, {1, 1}}));
  add("G", make_monoid({{0, 1}, {1, 0}}));
  add("Z3", make_monoid({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  add("Z4", make_monoid({{0, 1, 2, 3},
                         {1, 2, 3, 0},
                         {2, 3, 0, 1},
                         {3, 0, 1, 2}}));
}

const MonoidTable& Registry::get(const std::string& name) const {
  const auto it = std::find(order_.begin(), order_.end(), name);
  if (it == order_.end())
    throw Error(ErrorCode::UnknownName, "no monoid named \"" + name + "\"");
  return tables_[it - order_.begin()];
}

bool Registry::contains(const std::string& name) const {
  return std::find(order_.begin(), order_.end(), name) != order_.end();
}

std::optional<std::string> Registry::name_of(const MonoidTable& m) const {
  for (size_t i = 0; i < order_.size(); ++i)
    if (tables_[i] == m) return order_[i];
  return std::nullopt;
}

void Registry::add(const std::string& name, MonoidTable m) {
  if (name.empty())
    throw Error(ErrorCode::ParseError, "registry names must be nonempty");
  if (contains(name))
    throw Error(ErrorCode::ParseError,
                "registry already has a monoid named \"" + name + "\"");
  order_.push_back(name);
  tables_.push_back(std::move(m));
}

}  // namespace sbp

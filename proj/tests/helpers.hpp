#pragma once

#include <memory>

#include "rootlie/quiver.hpp"

namespace testq {

using rootlie::Arrow;
using rootlie::Quiver;

inline std::shared_ptr<const Quiver> a1() {
  return std::make_shared<Quiver>(std::vector<std::string>{"1"},
                                  std::vector<Arrow>{});
}

inline std::shared_ptr<const Quiver> a2() {
  return std::make_shared<Quiver>(std::vector<std::string>{"1", "2"},
                                  std::vector<Arrow>{{"a", 0, 1}});
}

inline std::shared_ptr<const Quiver> a3() {
  return std::make_shared<Quiver>(
      std::vector<std::string>{"1", "2", "3"},
      std::vector<Arrow>{{"a", 0, 1}, {"b", 1, 2}});
}

inline std::shared_ptr<const Quiver> d4() {
  // three outer vertices, arrows into the center (vertex 3)
  return std::make_shared<Quiver>(
      std::vector<std::string>{"1", "2", "3", "c"},
      std::vector<Arrow>{{"a", 0, 3}, {"b", 1, 3}, {"c", 2, 3}});
}

inline std::shared_ptr<const Quiver> kronecker() {
  return std::make_shared<Quiver>(
      std::vector<std::string>{"1", "2"},
      std::vector<Arrow>{{"a", 0, 1}, {"b", 0, 1}});
}

inline std::shared_ptr<const Quiver> wild3() {
  // three arrows between two vertices: wild
  return std::make_shared<Quiver>(
      std::vector<std::string>{"1", "2"},
      std::vector<Arrow>{{"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}});
}

}  // namespace testq

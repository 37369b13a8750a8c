#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rootlie/quiver.hpp"

namespace rootlie {

/// Coordinates of a regular class inside a tube: the point of the
/// projective line (normalized string), the socle index in Z/N_z and the
/// regular length. Per-field data, unlike root labels.
struct TubeCoord {
  std::string z;
  int socle = 0;
  int length = 1;

  auto tie() const { return std::tie(z, socle, length); }
  bool operator==(const TubeCoord& o) const { return tie() == o.tie(); }
  bool operator<(const TubeCoord& o) const { return tie() < o.tie(); }
};

/// Canonical name of one indecomposable class: its dimension vector, plus a
/// tube coordinate for regulars of a tame quiver, or the aggregate flag for
/// the constructible class of all indecomposables of that dimension.
struct IndecLabel {
  DimVector dim;
  bool aggregate = false;
  std::optional<TubeCoord> tube;

  auto tie() const { return std::tie(dim, aggregate, tube); }
  bool operator==(const IndecLabel& o) const { return tie() == o.tie(); }
  bool operator<(const IndecLabel& o) const { return tie() < o.tie(); }

  std::string str() const {
    if (aggregate) {
      return "E0" + dim_str(dim);
    }
    if (tube) {
      return "R(z=" + tube->z + ",l=" + std::to_string(tube->length) +
             ",i=" + std::to_string(tube->socle) + ")";
    }
    return "S" + dim_str(dim);
  }
};

/// Iso class of a module: sorted multiset of indecomposable labels.
using ModuleLabel = std::vector<IndecLabel>;

inline ModuleLabel normalized(ModuleLabel m) {
  std::sort(m.begin(), m.end());
  return m;
}

inline DimVector label_dim(const ModuleLabel& m, int nverts) {
  DimVector d(nverts, 0);
  for (const IndecLabel& l : m) d = d + l.dim;
  return d;
}

inline std::string label_str(const ModuleLabel& m) {
  if (m.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += "+";
    s += m[i].str();
  }
  return s;
}

/// Object of the root category: module part plus shifted part,
/// mod (+) sh[1]. Shift by 2 is the identity, so one shift flag suffices.
struct RootCatLabel {
  ModuleLabel mod;
  ModuleLabel sh;

  auto tie() const { return std::tie(mod, sh); }
  bool operator==(const RootCatLabel& o) const { return tie() == o.tie(); }
  bool operator<(const RootCatLabel& o) const { return tie() < o.tie(); }

  bool is_module() const { return sh.empty(); }
  bool is_shifted() const { return mod.empty() && !sh.empty(); }
  bool is_zero() const { return mod.empty() && sh.empty(); }

  /// Single indecomposable object (one part, one summand)?
  bool is_indec() const {
    return (mod.size() + sh.size() == 1);
  }

  RootCatLabel shifted() const { return {sh, mod}; }

  /// Class in K_0: dim(mod) - dim(sh).
  DimVector k0_class(int nverts) const {
    return label_dim(mod, nverts) - label_dim(sh, nverts);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < mod.size(); ++i) {
      if (!s.empty()) s += "+";
      s += mod[i].str();
    }
    for (size_t i = 0; i < sh.size(); ++i) {
      if (!s.empty()) s += "+";
      s += sh[i].str() + "[1]";
    }
    return s;
  }
};

inline RootCatLabel module_object(ModuleLabel m) {
  return {normalized(std::move(m)), {}};
}
inline RootCatLabel shifted_object(ModuleLabel m) {
  return {{}, normalized(std::move(m))};
}

}  // namespace rootlie

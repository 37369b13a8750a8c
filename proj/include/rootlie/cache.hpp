#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "rootlie/hall.hpp"

namespace rootlie {

/// FNV-1a over the canonicalized quiver content: stable across runs and
/// insensitive to declaration order in the file.
inline std::string quiver_content_hash(const Quiver& q) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : q.canonical_content()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Persistent Hall-polynomial store: one plain-text file per quiver hash,
/// one record per line. Writes go through a temp file plus atomic rename,
/// so readers never observe partial records. Unparseable records are
/// dropped with a warning and recomputed on demand.
class CacheStore {
public:
  CacheStore(std::string dir, const Quiver& q)
      : dir_(std::move(dir)), hash_(quiver_content_hash(q)) {
    std::filesystem::create_directories(dir_);
    load();
  }

  const std::string& quiver_hash() const { return hash_; }
  std::string path() const { return dir_ + "/hall-" + hash_ + ".cache"; }

  /// Cached polynomial, or compute-verify-store. A hit is cross-checked
  /// against a fresh count at the smallest prime; a tampered record is
  /// recomputed and repaired in place.
  HallPolynomial get_or_compute(const HallContext& ctx,
                                const ModuleLabel& target,
                                const ModuleLabel& quot,
                                const ModuleLabel& sub) {
    std::string key = make_key(target, quot, sub);
    auto it = records_.find(key);
    if (it != records_.end()) {
      HallPolynomial h = it->second;
      h.target = target;
      h.quot = quot;
      h.sub = sub;
      int p = h.primes_used.empty() ? 2 : h.primes_used.front();
      if (h.poly.eval(p) ==
          ctx.count_for_prime(target, quot, sub, PrimeField(p)))
        return h;
      std::cerr << "rootlie cache: record for " << key
                << " failed verification; recomputing\n";
      records_.erase(it);
    }
    HallPolynomial h = ctx.hall_polynomial(target, quot, sub);
    records_[key] = h;
    persist();
    return h;
  }

  size_t size() const { return records_.size(); }

private:
  static std::string make_key(const ModuleLabel& target,
                              const ModuleLabel& quot, const ModuleLabel& sub) {
    return label_str(target) + "|" + label_str(quot) + "|" + label_str(sub);
  }

  void load() {
    std::ifstream in(path());
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string kw, key;
      int bound = 0, nprimes = 0, ncoeffs = 0;
      if (!(ls >> kw >> key >> bound >> nprimes) || kw != "hall") {
        std::cerr << "rootlie cache: dropping corrupt record: " << line << "\n";
        continue;
      }
      HallPolynomial h;
      h.degree_bound = bound;
      bool ok = true;
      for (int i = 0; i < nprimes && ok; ++i) {
        int p;
        if (ls >> p) h.primes_used.push_back(p);
        else ok = false;
      }
      if (ok && (ls >> ncoeffs)) {
        std::vector<Int> cs;
        for (int i = 0; i < ncoeffs && ok; ++i) {
          std::string c;
          if (ls >> c) {
            try {
              cs.emplace_back(c);
            } catch (...) {
              ok = false;
            }
          } else {
            ok = false;
          }
        }
        if (ok) h.poly = IntPoly(std::move(cs));
      } else {
        ok = false;
      }
      if (!ok) {
        std::cerr << "rootlie cache: dropping corrupt record: " << line << "\n";
        continue;
      }
      records_[key] = std::move(h);
    }
  }

  void persist() const {
    std::string tmp = path() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << "# rootlie hall cache, quiver " << hash_ << "\n";
      for (const auto& [key, h] : records_) {
        out << "hall " << key << " " << h.degree_bound << " "
            << h.primes_used.size();
        for (int p : h.primes_used) out << " " << p;
        out << " " << h.poly.coeffs().size();
        for (const Int& c : h.poly.coeffs()) out << " " << c;
        out << "\n";
      }
    }
    std::filesystem::rename(tmp, path());
  }

  std::string dir_;
  std::string hash_;
  std::map<std::string, HallPolynomial> records_;
};

}  // namespace rootlie

#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "chebyperm/integers.hpp"
#include "chebyperm/permanent.hpp"

namespace chebyperm {

// Append-only CSV cache of computed volumes, keyed by (d, n).  A fixed 1%
// slice of keys is always recomputed on lookup; a mismatch there means the
// file was edited or corrupted and is reported as an error rather than
// silently served.
class VolumeCache {
 public:
  explicit VolumeCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

  static bool spot_check_selected(long long d, long long n) {
    return (((1000003 * d + 8191 * n) % 100) + 100) % 100 == 0;
  }

  bool contains(long long d, long long n) const { return entries_.count({d, n}) > 0; }

  std::size_t size() const { return entries_.size(); }

  BigInt get_or_compute(long long d, long long n, const EngineLimits& limits = {},
                        int workers = 1) {
    const auto it = entries_.find({d, n});
    if (it != entries_.end()) {
      if (spot_check_selected(d, n)) {
        const BigInt fresh = ball_volume(d, n, limits, workers);
        if (fresh != it->second)
          throw std::runtime_error("volume cache mismatch at d=" + std::to_string(d) +
                                   " n=" + std::to_string(n) + ": cached " +
                                   it->second.str() + ", recomputed " + fresh.str());
      }
      return it->second;
    }
    BigInt v = ball_volume(d, n, limits, workers);
    append(d, n, v);
    entries_.emplace(std::make_pair(d, n), v);
    return v;
  }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (lineno == 1 && line == "d,n,volume") continue;
      std::istringstream ss(line);
      std::string ds, ns, vs;
      if (!std::getline(ss, ds, ',') || !std::getline(ss, ns, ',') || !std::getline(ss, vs))
        throw std::runtime_error("volume cache " + path_.string() + ": malformed line " +
                                 std::to_string(lineno));
      try {
        entries_[{std::stoll(ds), std::stoll(ns)}] = BigInt(vs);
      } catch (const std::exception&) {
        throw std::runtime_error("volume cache " + path_.string() + ": malformed line " +
                                 std::to_string(lineno));
      }
    }
  }

  void append(long long d, long long n, const BigInt& v) {
    const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
    std::ofstream out(path_, std::ios::app);
    if (!out)
      throw std::runtime_error("volume cache " + path_.string() + ": cannot open for append");
    if (fresh) out << "d,n,volume\n";
    out << d << "," << n << "," << v << "\n";
  }

  std::filesystem::path path_;
  std::map<std::pair<long long, long long>, BigInt> entries_;
};

}  // namespace chebyperm

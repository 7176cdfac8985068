#pragma once

#include <map>
#include <optional>
#include <string>

#include "tracelab/solver.hpp"

namespace tracelab {

/// Single-file JSON cache of solved m(n,s) values with witnesses. Entries
/// re-validate on load; corrupted or invalid entries are dropped with a
/// warning on stderr. An optimal entry is never overwritten by a
/// non-optimal one. Writes go through a temp file + rename.
class ResultCache {
public:
  struct Entry {
    int n = 0;
    std::uint64_t s = 0;
    std::uint64_t value = 0;
    bool optimal = false;
    bool never_fails = false;
    std::string backend;
    std::optional<SetFamily> witness;
    std::string timestamp;  // ISO-8601 UTC
    std::string version;
  };

  /// Default path: $TRACELAB_CACHE, else ~/.tracelab/cache.json.
  static std::string default_path();

  explicit ResultCache(std::string path);

  void load();
  void save() const;

  std::optional<Entry> lookup(int n, std::uint64_t s) const;

  /// Applies the never-downgrade rule; returns true when stored.
  bool store(const SolveResult& result);

  std::size_t size() const { return entries_.size(); }
  const std::string& path() const { return path_; }

private:
  std::string path_;
  std::map<std::pair<int, std::uint64_t>, Entry> entries_;
};

}  // namespace tracelab

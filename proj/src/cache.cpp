#include "tracelab/cache.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tracelab/family_io.hpp"

namespace tracelab {

namespace {

constexpr const char* kToolkitVersion = "tracelab-0.1.0";

std::string now_utc() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string ResultCache::default_path() {
  if (const char* env = std::getenv("TRACELAB_CACHE"); env != nullptr && *env != '\0') return env;
  const char* home = std::getenv("HOME");
  return std::string(home != nullptr ? home : ".") + "/.tracelab/cache.json";
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

void ResultCache::load() {
  entries_.clear();
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;  // missing cache is an empty cache
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    std::cerr << "tracelab: dropping unreadable cache " << path_ << ": " << e.what() << "\n";
    return;
  }
  for (const auto& j : doc.value("entries", Json::array())) {
    try {
      Entry entry;
      entry.n = j.at("n").get<int>();
      entry.s = j.at("s").get<std::uint64_t>();
      entry.value = j.at("value").get<std::uint64_t>();
      entry.optimal = j.at("optimal").get<bool>();
      entry.never_fails = j.value("never_fails", false);
      entry.backend = j.value("backend", "");
      entry.timestamp = j.value("timestamp", "");
      entry.version = j.value("version", "");
      if (!j.at("witness").is_null()) {
        entry.witness = family_from_json(j.at("witness"));
        if (!validate_witness(*entry.witness, entry.s, entry.value))
          throw std::invalid_argument("witness failed re-validation");
      } else if (!entry.never_fails) {
        throw std::invalid_argument("missing witness on a finite entry");
      }
      entries_[{entry.n, entry.s}] = std::move(entry);
    } catch (const std::exception& e) {
      std::cerr << "tracelab: dropping corrupted cache entry: " << e.what() << "\n";
    }
  }
}

void ResultCache::save() const {
  Json arr = Json::array();
  for (const auto& [key, entry] : entries_) {
    Json j{{"n", entry.n},
           {"s", entry.s},
           {"value", entry.value},
           {"optimal", entry.optimal},
           {"backend", entry.backend},
           {"timestamp", entry.timestamp},
           {"version", entry.version}};
    if (entry.never_fails) j["never_fails"] = true;
    j["witness"] = entry.witness ? family_to_json(*entry.witness) : Json(nullptr);
    arr.push_back(std::move(j));
  }
  const Json doc{{"version", 1}, {"entries", arr}};

  namespace fs = std::filesystem;
  const fs::path target(path_);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache temp file " + tmp.string());
    out << doc.dump(2) << "\n";
  }
  fs::rename(tmp, target);
}

std::optional<ResultCache::Entry> ResultCache::lookup(int n, std::uint64_t s) const {
  const auto it = entries_.find({n, s});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool ResultCache::store(const SolveResult& result) {
  const auto key = std::make_pair(result.n, result.s);
  const auto it = entries_.find(key);
  if (it != entries_.end() && it->second.optimal && !result.optimal) return false;
  Entry entry;
  entry.n = result.n;
  entry.s = result.s;
  entry.value = result.value;
  entry.optimal = result.optimal;
  entry.never_fails = result.never_fails;
  entry.backend = to_string(result.backend);
  if (result.witness) entry.witness = result.witness->family();
  entry.timestamp = now_utc();
  entry.version = kToolkitVersion;
  entries_[key] = std::move(entry);
  return true;
}

}  // namespace tracelab

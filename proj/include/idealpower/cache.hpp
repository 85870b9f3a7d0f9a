#pragma once

/// @file cache.hpp
/// @brief Append-only JSON-lines result cache keyed by canonical JSON.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

namespace idealpower {

/// Records are {"key": ..., "value": ...}, one per line. Keys compare by
/// their canonical dump (nlohmann orders object keys). Corrupt lines are
/// skipped with a warning on `warn`.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, std::ostream* warn = &std::cerr)
      : path_(std::move(dir) / "results.jsonl"), warn_(warn) {}

  const std::filesystem::path& path() const { return path_; }

  std::optional<nlohmann::json> lookup(const nlohmann::json& key) const {
    std::lock_guard lock(mutex_);
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    const std::string want = key.dump();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
      if (rec.is_discarded() || !rec.is_object() || !rec.contains("key") || !rec.contains("value")) {
        if (warn_) *warn_ << "warning: skipping corrupt cache line " << lineno << " in " << path_.string() << "\n";
        continue;
      }
      if (rec["key"].dump() == want) return rec["value"];
    }
    return std::nullopt;
  }

  void append(const nlohmann::json& key, const nlohmann::json& value) {
    std::lock_guard lock(mutex_);
    std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot append to cache " + path_.string());
    out << nlohmann::json{{"key", key}, {"value", value}}.dump() << '\n';
  }

 private:
  std::filesystem::path path_;
  std::ostream* warn_;
  mutable std::mutex mutex_;
};

}  // namespace idealpower

#pragma once

// Run manifest: a flat, human-readable "key = value" file serialized next to
// every command output. Rerunning a command from its manifest reproduces the
// output byte-for-byte (worker count may be overridden; it never affects
// results). Doubles are stored with 17 significant digits so they round-trip
// exactly.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gardner/csv.hpp"
#include "gardner/version.hpp"

namespace gardner {

class RunManifest {
 public:
  RunManifest() {
    set("tool", kToolName);
    set("version", kToolVersion);
  }

  void set(const std::string& key, const std::string& value) {
    for (auto& kv : entries_)
      if (kv.first == key) {
        kv.second = value;
        return;
      }
    entries_.emplace_back(key, value);
  }
  void set(const std::string& key, double value) { set(key, format_g17(value)); }
  void set(const std::string& key, int value) { set(key, std::to_string(value)); }
  void set(const std::string& key, std::uint64_t value) { set(key, std::to_string(value)); }

  bool has(const std::string& key) const {
    for (const auto& kv : entries_)
      if (kv.first == key) return true;
    return false;
  }

  std::string get(const std::string& key) const {
    for (const auto& kv : entries_)
      if (kv.first == key) return kv.second;
    throw std::runtime_error("manifest: missing key '" + key + "'");
  }
  std::string get_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get(key) : fallback;
  }
  double get_double(const std::string& key) const { return std::stod(get(key)); }
  int get_int(const std::string& key) const { return std::stoi(get(key)); }
  std::uint64_t get_u64(const std::string& key) const { return std::stoull(get(key)); }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  void write(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("manifest: cannot write " + path);
    os << "# " << kToolName << " run manifest\n";
    for (const auto& kv : entries_) os << kv.first << " = " << kv.second << '\n';
  }

  static RunManifest read(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("manifest: cannot read " + path);
    RunManifest mf;
    mf.entries_.clear();
    std::string line;
    while (std::getline(is, line)) {
      if (line.empty() || line[0] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t\r");
        return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
      };
      mf.entries_.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return mf;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace gardner

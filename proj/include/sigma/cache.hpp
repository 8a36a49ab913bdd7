#pragma once

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "sigma/errors.hpp"
#include "sigma/hash.hpp"

namespace sigma {

/// Content-addressed payload store. Each entry is `<dir>/<key>.sgc` holding
/// a header line "SGC1 <checksum>" followed by the payload bytes. Entries
/// whose checksum does not match are reported as corrupt and never returned.
class Cache {
 public:
  enum class Lookup { Hit, Miss, Corrupt };

  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Directory from the flag if given, else $SIGMA_CACHE_DIR, else none.
  static std::optional<Cache> configure(const std::string& flag_dir) {
    if (!flag_dir.empty()) return Cache(flag_dir);
    if (const char* env = std::getenv("SIGMA_CACHE_DIR"); env && *env) return Cache(env);
    return std::nullopt;
  }

  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::filesystem::path path_for(const std::string& key) const {
    for (char c : key)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_')
        throw ValidationError("cache key must be alphanumeric: " + key);
    return dir_ / (key + ".sgc");
  }

  Lookup get(const std::string& key, std::string& payload) const {
    const auto path = path_for(key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return Lookup::Miss;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SigmaError("cannot read cache entry " + path.string());
    std::string header;
    std::getline(in, header);
    std::ostringstream body;
    body << in.rdbuf();
    if (in.bad()) throw SigmaError("cannot read cache entry " + path.string());
    std::string data = body.str();
    if (header != "SGC1 " + checksum(data)) return Lookup::Corrupt;
    payload = std::move(data);
    return Lookup::Hit;
  }

  void put(const std::string& key, const std::string& payload) const {
    const auto path = path_for(key);
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw SigmaError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    // Write to a temporary name, then rename, so readers never see half an entry.
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw SigmaError("cannot write cache entry " + tmp);
      out << "SGC1 " << checksum(payload) << '\n' << payload;
      if (!out) throw SigmaError("cannot write cache entry " + tmp);
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw SigmaError("cannot move cache entry into place at " + path.string() + ": " + ec.message());
  }

  static std::string checksum(const std::string& payload) {
    return to_hex(fnv1a64(std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(payload.data()), payload.size())));
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace sigma

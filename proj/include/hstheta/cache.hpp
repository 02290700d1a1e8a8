// Copyright 2026 the hstheta authors
#ifndef HSTHETA_CACHE_HPP
#define HSTHETA_CACHE_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>

#include "hstheta/digest.hpp"
#include "json.hpp"

namespace hstheta {

// One file per digest under the cache directory. Writers stage to a
// temporary name and rename into place, so concurrent processes never see a
// partial entry; readers re-verify the payload checksum and silently treat a
// corrupt file as a miss.
class DiskCache {
 public:
  DiskCache() = default;
  explicit DiskCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  void store(const std::string& key, const nlohmann::json& payload) const {
    if (!enabled()) return;
    namespace fs = std::filesystem;
    fs::create_directories(dir_);
    nlohmann::json file;
    file["key"] = key;
    std::string body = payload.dump();
    file["checksum"] = digest_of(body);
    file["payload"] = payload;
    std::random_device rd;
    fs::path tmp = fs::path(dir_) / (key + ".tmp-" + std::to_string(rd()));
    {
      std::ofstream out(tmp);
      out << file.dump();
    }
    fs::rename(tmp, fs::path(dir_) / (key + ".json"));
  }

  std::optional<nlohmann::json> load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    namespace fs = std::filesystem;
    fs::path path = fs::path(dir_) / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json file;
    try {
      in >> file;
    } catch (...) {
      return std::nullopt;
    }
    if (!file.contains("key") || !file.contains("checksum") || !file.contains("payload"))
      return std::nullopt;
    if (file["key"].get<std::string>() != key) return std::nullopt;
    if (digest_of(file["payload"].dump()) != file["checksum"].get<std::string>())
      return std::nullopt;
    return file["payload"];
  }

 private:
  std::string dir_;
};

}  // namespace hstheta

#endif

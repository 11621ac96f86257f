#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "trigweyl/serialize.hpp"
#include "trigweyl/weyl_orbits.hpp"

namespace trigweyl {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kCacheFormat = 1;
inline constexpr const char* kWorkspaceEnv = "TRIGWEYL_WORKSPACE";

/// Directory of JSON caches for one parameter set (root system, max_norm,
/// xi). The manifest records those parameters together with the engine
/// version; any mismatch clears the caches.
class Workspace {
 public:
  Workspace(const std::filesystem::path& root, const std::string& root_system, int max_norm, const OrderingVector& xi);

  const std::filesystem::path& directory() const noexcept { return dir_; }
  const Json& manifest() const noexcept { return manifest_; }

  /// Cached document `name`, or nothing when absent or unreadable.
  std::optional<Json> load(const std::string& name) const;
  /// Written through a temporary file and renamed into place.
  void store(const std::string& name, const Json& value) const;
  /// Removes a cache entry that failed validation.
  void discard(const std::string& name) const;

 private:
  std::filesystem::path dir_;
  Json manifest_;
};

Json workspace_manifest(const std::string& root_system, int max_norm, const OrderingVector& xi);

}  // namespace trigweyl

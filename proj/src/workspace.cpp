#include "trigweyl/workspace.hpp"

#include <fstream>
#include <sstream>

#include "trigweyl/error.hpp"

namespace trigweyl {

namespace fs = std::filesystem;

Json workspace_manifest(const std::string& root_system, int max_norm, const OrderingVector& xi) {
  Json x = Json::array();
  for (auto v : xi.values()) x.push_back(v);
  return Json{{"engine_version", kEngineVersion},
              {"format", kCacheFormat},
              {"root_system", root_system},
              {"max_norm", max_norm},
              {"xi", x}};
}

namespace {

std::string subdirectory_name(const std::string& root_system, int max_norm, const OrderingVector& xi) {
  std::ostringstream os;
  os << root_system << "-norm" << max_norm << "-xi";
  bool first = true;
  for (auto v : xi.values()) {
    os << (first ? "" : "_") << v;
    first = false;
  }
  return os.str();
}

std::optional<Json> read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

void write_json(const fs::path& path, const Json& value) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::CacheError, "cannot write " + tmp.string());
    out << value.dump() << '\n';
    if (!out) throw Error(ErrorCode::CacheError, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

Workspace::Workspace(const fs::path& root, const std::string& root_system, int max_norm, const OrderingVector& xi)
    : dir_(root / subdirectory_name(root_system, max_norm, xi)),
      manifest_(workspace_manifest(root_system, max_norm, xi)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::CacheError, "cannot create workspace " + dir_.string() + ": " + ec.message());
  const fs::path manifest_path = dir_ / "manifest.json";
  const auto existing = read_json(manifest_path);
  if (!existing || *existing != manifest_) {
    for (const auto& entry : fs::directory_iterator(dir_)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") fs::remove(entry.path(), ec);
    }
    write_json(manifest_path, manifest_);
  }
}

std::optional<Json> Workspace::load(const std::string& name) const { return read_json(dir_ / (name + ".json")); }

void Workspace::store(const std::string& name, const Json& value) const { write_json(dir_ / (name + ".json"), value); }

void Workspace::discard(const std::string& name) const {
  std::error_code ec;
  fs::remove(dir_ / (name + ".json"), ec);
}

}  // namespace trigweyl

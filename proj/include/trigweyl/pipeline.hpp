#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "trigweyl/chevalley.hpp"
#include "trigweyl/metric.hpp"
#include "trigweyl/sutherland.hpp"
#include "trigweyl/workspace.hpp"

namespace trigweyl {

struct PipelineConfig {
  int max_norm = 56;
  OrderingVector xi;
  /// Cache root; no caching when empty.
  std::optional<std::filesystem::path> workspace;
  unsigned threads = 1;
};

/// The F4 chain computed on demand, each stage at most once, and read from
/// or written to the workspace when one is configured.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);

  const PipelineConfig& config() const noexcept { return config_; }
  const RootSystem& root_system() const noexcept { return rs_; }
  const OrbitTable& table();
  FusionTable& fusions();
  const BasisResult& basis();
  const InverseMetric& metric();
  const FactorizationResult& factorization();
  const RCoefficients& r();
  /// Not cached: depends on the sampling seed.
  const PotentialData& potential(std::uint64_t seed);

  /// Writes the fusion products computed so far.
  void save_fusions();

 private:
  template <class T, class Load, class Compute, class Save>
  const T& stage(std::optional<T>& slot, const char* name, Load load, Compute compute, Save save);

  PipelineConfig config_;
  RootSystem rs_;
  std::optional<Workspace> ws_;
  std::optional<OrbitTable> table_;
  std::unique_ptr<FusionTable> fusions_;
  std::size_t saved_fusions_ = 0;
  std::optional<BasisResult> basis_;
  std::optional<InverseMetric> metric_;
  std::optional<FactorizationResult> factorization_;
  std::optional<RCoefficients> r_;
  std::optional<PotentialData> potential_;
  std::uint64_t potential_seed_ = 0;
};

}  // namespace trigweyl

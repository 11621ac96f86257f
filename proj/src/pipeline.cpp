#include "trigweyl/pipeline.hpp"

#include "trigweyl/error.hpp"
#include "trigweyl/serialize.hpp"

namespace trigweyl {

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)), rs_(RootSystem::f4()) {
  if (config_.max_norm < 0) throw Error(ErrorCode::OrbitOutOfTable, "max norm must be nonnegative");
  if (config_.threads == 0) config_.threads = 1;
  if (config_.workspace) ws_.emplace(*config_.workspace, rs_.name(), config_.max_norm, config_.xi);
}

template <class T, class Load, class Compute, class Save>
const T& Pipeline::stage(std::optional<T>& slot, const char* name, Load load, Compute compute, Save save) {
  if (slot) return *slot;
  if (ws_) {
    if (auto cached = ws_->load(name)) {
      try {
        slot.emplace(load(*cached));
        return *slot;
      } catch (const Error&) {
        ws_->discard(name);
      } catch (const Json::exception&) {
        ws_->discard(name);
      }
    }
  }
  slot.emplace(compute());
  if (ws_) ws_->store(name, save(*slot));
  return *slot;
}

const OrbitTable& Pipeline::table() {
  return stage(
      table_, "orbits", [&](const Json& j) { return orbit_table_from_json(j, rs_); },
      [&] { return OrbitTable::enumerate(rs_, config_.max_norm, config_.xi); },
      [](const OrbitTable& t) { return to_json(t); });
}

FusionTable& Pipeline::fusions() {
  if (!fusions_) {
    fusions_ = std::make_unique<FusionTable>(table());
    if (ws_) {
      if (auto cached = ws_->load("fusion")) {
        try {
          load_fusions(*cached, *fusions_);
          saved_fusions_ = fusions_->size();
        } catch (const std::exception&) {
          fusions_ = std::make_unique<FusionTable>(table());
          ws_->discard("fusion");
        }
      }
    }
  }
  return *fusions_;
}

void Pipeline::save_fusions() {
  if (!ws_ || !fusions_ || fusions_->size() == saved_fusions_) return;
  ws_->store("fusion", to_json(*fusions_));
  saved_fusions_ = fusions_->size();
}

const BasisResult& Pipeline::basis() {
  const bool fresh = !basis_;
  const auto& b = stage(
      basis_, "basis", [](const Json& j) { return basis_from_json(j); },
      [&] { return build_basis(table(), fusions()); }, [](const BasisResult& v) { return to_json(v); });
  if (fresh) save_fusions();
  return b;
}

const InverseMetric& Pipeline::metric() {
  const bool fresh = !metric_;
  const auto& m = stage(
      metric_, "metric", [](const Json& j) { return metric_from_json(j); },
      [&] { return inverse_metric(basis(), table(), fusions(), config_.threads); },
      [](const InverseMetric& v) { return to_json(v); });
  if (fresh) save_fusions();
  return m;
}

const FactorizationResult& Pipeline::factorization() {
  return stage(
      factorization_, "factorization",
      [&](const Json& j) { return factorization_from_json(j, basis().nvars()); },
      [&] { return factorize(metric(), basis(), table(), config_.threads); },
      [](const FactorizationResult& v) { return to_json(v); });
}

const RCoefficients& Pipeline::r() {
  return stage(
      r_, "rcoeff", [&](const Json& j) { return r_from_json(j, basis().nvars()); },
      [&] { return r_coefficients(metric(), factorization()); }, [](const RCoefficients& v) { return to_json(v); });
}

const PotentialData& Pipeline::potential(std::uint64_t seed) {
  if (!potential_ || potential_seed_ != seed) {
    potential_.emplace(potential_data(factorization(), r(), basis(), table(), seed));
    potential_seed_ = seed;
  }
  return *potential_;
}

}  // namespace trigweyl

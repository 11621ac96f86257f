// Runs all acceptance criteria and prints one PASS/FAIL line per criterion.

#include <cstdlib>
#include <iostream>

#include "trigweyl/acceptance.hpp"

int main(int argc, char** argv) {
  trigweyl::PipelineConfig cfg;
  cfg.max_norm = 56;
  trigweyl::AcceptanceOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  trigweyl::Pipeline pipeline(cfg);
  bool ok = true;
  for (const auto& r : trigweyl::run_acceptance(pipeline, options)) {
    std::cout << trigweyl::to_text(r) << std::flush;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

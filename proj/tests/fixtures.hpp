#pragma once

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "trigweyl/pipeline.hpp"
#include "trigweyl/poly_text.hpp"
#include "trigweyl/reference.hpp"

namespace fixtures {

using namespace trigweyl;

/// One pipeline per test binary, computed on first use.
inline Pipeline& pipeline(int max_norm = 56) {
  static Pipeline p24([] {
    PipelineConfig c;
    c.max_norm = 24;
    return c;
  }());
  static Pipeline p56([] {
    PipelineConfig c;
    c.max_norm = 56;
    return c;
  }());
  return max_norm <= 24 ? p24 : p56;
}

/// Vector from unit coordinates, halves allowed.
inline LatticeVector vec(std::initializer_list<double> units) {
  std::vector<std::int32_t> s;
  for (double u : units) s.push_back(static_cast<std::int32_t>(std::lround(u * kScale)));
  return LatticeVector::from_scaled(s);
}

inline Poly poly(const std::string& text) { return parse_poly(text, pipeline().basis().basis); }

inline std::vector<long double> random_point(std::mt19937_64& gen, std::size_t dim = 4) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<long double> x(dim);
  for (auto& c : x) c = 2 * std::numbers::pi_v<long double> * static_cast<long double>(u(gen));
  return x;
}

/// T_orbit(x) = sum over elements of cos((beta, x)), summed independently of
/// the library's evaluators.
inline long double orbit_value(const Orbit& o, std::span<const long double> x) {
  long double s = 0;
  for (const auto& e : o.elements) {
    long double ph = 0;
    for (std::size_t i = 0; i < x.size(); ++i) ph += static_cast<long double>(e[i]) / kScale * x[i];
    s += std::cos(ph);
  }
  return s;
}

inline std::vector<long double> basis_point(const BasisResult& b, const OrbitTable& t, std::span<const long double> x) {
  std::vector<long double> v;
  for (const auto& l : b.basis) v.push_back(orbit_value(t.at(l), x));
  return v;
}

}  // namespace fixtures

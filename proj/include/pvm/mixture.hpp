// Copyright 2026 The PVM Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PVM_MIXTURE_HPP_
#define PVM_MIXTURE_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "pvm/core.hpp"
#include "pvm/data.hpp"

namespace pvm {

/// Three-class planar mixture: class centers ~ N(0, 16 I), ten subcenters
/// per class ~ N(center, I), each point drawn from a uniformly chosen
/// subcenter with N(subcenter, I/5) noise.
///
/// The seeded stream is consumed in a fixed documented order: class
/// centers, then all subcenters (class-major), then per point a subcenter
/// choice followed by two noise variates.
struct MixtureModel {
  static constexpr int kClasses = 3;
  static constexpr int kSubcenters = 10;
  static constexpr double kCenterSd = 4.0;         // sqrt(16)
  static constexpr double kPointSd = 0.4472135954999579;  // sqrt(1/5)

  std::array<std::array<double, 2>, kClasses> centers{};
  std::array<std::array<std::array<double, 2>, kSubcenters>, kClasses> subcenters{};

  static MixtureModel sample(Rng& rng) {
    MixtureModel m;
    for (auto& c : m.centers) {
      c[0] = kCenterSd * rng.normal();
      c[1] = kCenterSd * rng.normal();
    }
    for (int k = 0; k < kClasses; ++k)
      for (int s = 0; s < kSubcenters; ++s) {
        m.subcenters[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] = {
            m.centers[static_cast<std::size_t>(k)][0] + rng.normal(),
            m.centers[static_cast<std::size_t>(k)][1] + rng.normal()};
      }
    return m;
  }

  std::array<double, 2> draw_from_subcenter(Rng& rng, int cls, int sub) const {
    const auto& c = subcenters[static_cast<std::size_t>(cls)][static_cast<std::size_t>(sub)];
    return {c[0] + kPointSd * rng.normal(), c[1] + kPointSd * rng.normal()};
  }

  std::array<double, 2> draw_point(Rng& rng, int cls) const {
    const auto sub = static_cast<int>(rng.below(kSubcenters));
    return draw_from_subcenter(rng, cls, sub);
  }
};

/// Generates a labeled dataset with n/3 points per class (labels 1..3 in
/// blocks). Identical seeds give bit-identical datasets.
inline Dataset gen_mixture(std::uint64_t seed, int n = 300) {
  if (n < 3 || n % 3 != 0) throw input_error("mixture size must be a positive multiple of 3");
  Rng rng(seed);
  const MixtureModel model = MixtureModel::sample(rng);
  Dataset ds;
  ds.num_classes = MixtureModel::kClasses;
  ds.points.emplace();
  const int per_class = n / 3;
  for (int i = 0; i < n; ++i) {
    const int cls = i / per_class;
    const auto p = model.draw_point(rng, cls);
    ds.points->push_back({p[0], p[1]});
    ds.labels.push_back(cls + 1);
  }
  return ds;
}

}  // namespace pvm

#endif  // PVM_MIXTURE_HPP_

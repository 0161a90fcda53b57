#pragma once

// Syz(Δ) = ∪_{i<j} (γ_i+Γ) ∩ (γ_j+Γ), its generators, and ASyz for <p,q>.

#include <optional>
#include <vector>

#include "hilbzeta/semimodule.hpp"

namespace hz {

struct SyzygyModule {
  std::optional<Semimodule> syz;  // absent when n(Δ) = 1
  std::vector<int> t_syz;
};

SyzygyModule syzygy_module(const Semimodule& D);

struct AugmentedSyzygy {
  int gamma_i = 0;
  int gamma_j = 0;
  int sigma = 0;
  bool operator==(const AugmentedSyzygy&) const = default;
};

std::vector<AugmentedSyzygy> augmented_syzygy_pq(const Semimodule& D);

int shared_syzygies_below(const Semimodule& D);

}  // namespace hz

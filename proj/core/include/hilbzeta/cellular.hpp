#pragma once

// Exact decomposition of C^{[Δ]} into pieces (L-1)^a x A^b, refined by the
// number of minimal generators. Works symbolically over Q on the normalized
// parameters: the value-set equations are solved by triangular substitution,
// then each generator column of m·I is split into "coefficient = 0" and
// "coefficient != 0" branches, the latter turned into a torus coordinate.

#include <vector>

#include "hilbzeta/strata.hpp"

namespace hz {

struct Cell {
  int m = 0;       // minimal number of generators on the cell
  int torus = 0;   // number of (L-1) factors
  int affine = 0;  // number of L factors
  std::vector<int> redundant;  // generators lying in v(m·I)
};

struct CellDecomposition {
  int free_parameters = 0;  // dimension of C^{[Δ]} found by elimination
  std::vector<Cell> cells;
  GenClassTable table(int n) const;
};

CellDecomposition decompose_strata(const Semimodule& D);

}  // namespace hz

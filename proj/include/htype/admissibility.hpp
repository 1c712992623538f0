#pragma once

// For which (n, m) does an H-type group R^{2n} x R^m exist?
//
// The centre can have dimension m exactly when R^{2n} carries m anticommuting
// orthogonal skew-symmetric matrices, i.e. when m <= rho(2n) - 1 with rho the
// Radon-Hurwitz number. Odd n forces m = 1 (the group is then Heisenberg).

#include <vector>

#include "htype/series.hpp"

namespace htype {

struct AdmissibilityVerdict {
    DimPair pair;
    bool admissible = false;
    int rho_2n = 1;
    int max_m = 0;  ///< rho_2n - 1
};

/// rho(N) = 8a + 2^b where N = 2^{4a+b} * odd, b in {0,1,2,3}.
int radon_hurwitz(long N);

AdmissibilityVerdict admissible(DimPair pair);

/// Row-major mask, entry [n-1][m-1] true iff (n, m) is admissible.
std::vector<std::vector<bool>> shading_mask(int n_max, int m_max);

}  // namespace htype

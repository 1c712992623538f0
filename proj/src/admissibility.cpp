#include "htype/admissibility.hpp"

#include "htype/errors.hpp"

namespace htype {

int radon_hurwitz(long N) {
    if (N < 1)
        throw DomainError("radon_hurwitz: N must be positive");
    int valuation = 0;
    while (N % 2 == 0) {
        N /= 2;
        ++valuation;
    }
    const int a = valuation / 4;
    const int b = valuation % 4;
    return 8 * a + (1 << b);
}

AdmissibilityVerdict admissible(DimPair pair) {
    AdmissibilityVerdict v;
    v.pair = pair;
    v.rho_2n = radon_hurwitz(2L * pair.n);
    v.max_m = v.rho_2n - 1;
    v.admissible = pair.m <= v.max_m;
    return v;
}

std::vector<std::vector<bool>> shading_mask(int n_max, int m_max) {
    if (n_max < 1 || m_max < 1)
        throw DomainError("shading_mask: bounds must be at least 1");
    std::vector<std::vector<bool>> mask(static_cast<std::size_t>(n_max),
                                        std::vector<bool>(static_cast<std::size_t>(m_max)));
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= m_max; ++m)
            mask[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)] =
                admissible(DimPair(n, m)).admissible;
    return mask;
}

}  // namespace htype

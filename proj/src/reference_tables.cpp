// Reference values of gamma~ and gamma- for 1 <= n, m <= 10 at 4 decimals,
// together with the highlighted (> 1) and shaded (inadmissible) cells of the
// published layout. Used by `check tables` and the acceptance suite.

#include <sstream>

#include "htype/errors.hpp"
#include "htype/report.hpp"

namespace htype {

namespace {

// Shaded cells in the printed layout, "row-col" with row = n + 1, col = m + 1.
constexpr const char* kShadedLayout =
    "2-3,2-4,2-5,2-6,2-7,2-8,2-9,2-10,2-11,"
    "3-5,3-6,3-7,3-8,3-9,3-10,3-11,"
    "4-3,4-4,4-5,4-6,4-7,4-8,4-9,4-10,4-11,"
    "5-9,5-10,5-11,"
    "6-3,6-4,6-5,6-6,6-7,6-8,6-9,6-10,6-11,"
    "7-5,7-6,7-7,7-8,7-9,7-10,7-11,"
    "8-3,8-4,8-5,8-6,8-7,8-8,8-9,8-10,8-11,"
    "9-10,9-11,"
    "10-3,10-4,10-5,10-6,10-7,10-8,10-9,10-10,10-11,"
    "11-5,11-6,11-7,11-8,11-9,11-10,11-11";

constexpr const char* kGammaTilde[10] = {
    "3.2423 2.1392 1.5574 1.1666 0.8835 0.6718 0.5115 0.3893 0.2960 0.2248",
    "1.8238 1.2325 0.8662 0.6221 0.4530 0.3329 0.2462 0.1828 0.1361 0.1015",
    "1.0689 0.7141 0.4892 0.3413 0.2414 0.1726 0.1244 0.0903 0.0659 0.0482",
    "0.6249 0.4120 0.2771 0.1893 0.1310 0.0917 0.0647 0.0461 0.0330 0.0237",
    "0.3626 0.2365 0.1568 0.1054 0.0718 0.0494 0.0343 0.0240 0.0169 0.0120",
    "0.2089 0.1350 0.0885 0.0588 0.0395 0.0268 0.0184 0.0127 0.0088 0.0062",
    "0.1196 0.0767 0.0499 0.0328 0.0218 0.0146 0.0099 0.0068 0.0046 0.0032",
    "0.0681 0.0434 0.0280 0.0183 0.0120 0.0080 0.0054 0.0036 0.0025 0.0017",
    "0.0386 0.0245 0.0157 0.0102 0.0067 0.0044 0.0029 0.0020 0.0013 0.0010",
    "0.0218 0.0138 0.0088 0.0057 0.0037 0.0024 0.0016 0.0011 0.0007 0.0005",
};

constexpr const char* kGammaBar[10] = {
    "4.0000 2.2500 1.5803 1.1719 0.8847 0.6722 0.5116 0.3893 0.2960 0.2248",
    "3.0000 1.4815 0.9375 0.6451 0.4609 0.3357 0.2472 0.1832 0.1362 0.1016",
    "2.3704 1.0254 0.5898 0.3781 0.2558 0.1784 0.1269 0.0913 0.0663 0.0484",
    "1.8750 0.7258 0.3841 0.2308 0.1483 0.0992 0.0681 0.0476 0.0337 0.0241",
    "1.4746 0.5199 0.2558 0.1450 0.0888 0.0571 0.0379 0.0257 0.0178 0.0124",
    "1.1523 0.3751 0.1730 0.0930 0.0545 0.0337 0.0217 0.0143 0.0096 0.0066",
    "0.8953 0.2718 0.1184 0.0606 0.0341 0.0204 0.0127 0.0081 0.0054 0.0036",
    "0.6921 0.1977 0.0817 0.0401 0.0217 0.0125 0.0076 0.0047 0.0030 0.0020",
    "0.5329 0.1440 0.0568 0.0267 0.0140 0.0078 0.0046 0.0028 0.0018 0.0011",
    "0.4087 0.1051 0.0397 0.0180 0.0091 0.0049 0.0028 0.0017 0.0010 0.0006",
};

std::vector<std::string> split_rows(const char* const (&rows)[10]) {
    std::vector<std::string> cells;
    for (const char* row : rows) {
        std::istringstream in(row);
        std::string cell;
        while (in >> cell)
            cells.push_back(cell);
    }
    return cells;
}

}  // namespace

const ReferenceTable& reference_table(Quantity q) {
    static const ReferenceTable tilde{Quantity::gamma_tilde, split_rows(kGammaTilde),
                                      {{1, 1}, {2, 1}, {2, 2}, {3, 1}}};
    static const ReferenceTable bar{Quantity::gamma_bar, split_rows(kGammaBar),
                                    {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}};
    switch (q) {
    case Quantity::gamma_tilde:
        return tilde;
    case Quantity::gamma_bar:
        return bar;
    default:
        throw DomainError("reference_table: only gamma_tilde and gamma_bar are tabulated");
    }
}

const std::vector<std::pair<int, int>>& reference_shaded_cells() {
    static const std::vector<std::pair<int, int>> cells = [] {
        std::vector<std::pair<int, int>> out;
        std::istringstream in(kShadedLayout);
        std::string token;
        while (std::getline(in, token, ',')) {
            const auto dash = token.find('-');
            const int row = std::stoi(token.substr(0, dash));
            const int col = std::stoi(token.substr(dash + 1));
            out.emplace_back(row - 1, col - 1);
        }
        return out;
    }();
    return cells;
}

}  // namespace htype

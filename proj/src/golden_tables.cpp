#include "qp/golden_tables.hpp"

#include "qp/bisnomial.hpp"
#include "qp/quasi.hpp"

namespace qp {

const std::vector<std::vector<long long>>& golden_tribonacci_table() {
    static const std::vector<std::vector<long long>> t{
        {1},
        {1, 1},
        {1, 3, 1},
        {1, 5, 5, 1},
        {1, 7, 13, 7, 1},
        {1, 9, 25, 25, 9, 1},
        {1, 11, 41, 63, 41, 11, 1},
        {1, 13, 61, 129, 129, 61, 13, 1},
        {1, 15, 85, 231, 321, 231, 85, 15, 1},
        {1, 17, 113, 377, 681, 681, 377, 113, 17, 1},
    };
    return t;
}

const std::vector<std::vector<long long>>& golden_quadrabonacci_table() {
    static const std::vector<std::vector<long long>> t{
        {1},
        {1, 1},
        {1, 3, 1},
        {1, 6, 5, 1},
        {1, 9, 15, 7, 1},
        {1, 12, 33, 28, 9, 1},
        {1, 15, 60, 81, 45, 11, 1},
        {1, 18, 96, 189, 66, 33, 13, 1}, // as printed; columns 4 and 5 disagree with the recurrence
        {1, 21, 141, 378, 459, 281, 91, 15, 1},
        {1, 24, 195, 675, 1107, 946, 449, 120, 17, 1},
    };
    return t;
}

const std::vector<std::vector<long long>>& golden_biquadranomial_table() {
    static const std::vector<std::vector<long long>> t{
        {1},
        {1, 1, 1, 1},
        {1, 2, 3, 4, 3, 2, 1},
        {1, 3, 6, 10, 12, 12, 10, 6, 3, 1},
        {1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1},
        {1, 5, 15, 35, 65, 101, 135, 155, 155, 135, 101, 65, 35, 15},
    };
    return t;
}

std::vector<Erratum> compare_golden_quasi(int s, const std::vector<std::vector<long long>>& printed) {
    std::vector<Erratum> errata;
    for (std::size_t n = 0; n < printed.size(); ++n) {
        for (std::size_t k = 0; k < printed[n].size(); ++k) {
            ExactInt fresh = quasi_by_recurrence(s, static_cast<long long>(n), static_cast<long long>(k));
            if (fresh != printed[n][k])
                errata.push_back({static_cast<long long>(n), static_cast<long long>(k),
                                  ExactInt(printed[n][k]), fresh});
        }
    }
    return errata;
}

std::vector<Erratum> compare_golden_bisnomial(int s, const std::vector<std::vector<long long>>& printed) {
    std::vector<Erratum> errata;
    for (std::size_t n = 0; n < printed.size(); ++n) {
        for (std::size_t k = 0; k < printed[n].size(); ++k) {
            ExactInt fresh = bisnomial_by_longitudinal(s, static_cast<long long>(n), static_cast<long long>(k));
            if (fresh != printed[n][k])
                errata.push_back({static_cast<long long>(n), static_cast<long long>(k),
                                  ExactInt(printed[n][k]), fresh});
        }
    }
    return errata;
}

} // namespace qp

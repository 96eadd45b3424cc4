#pragma once

#include <optional>
#include <vector>

#include "nakamol/quiver.hpp"

namespace nakamol {

// Witness for a non-flat moment map: a decomposition
// (v,1) = (beta0,1) + sum_t (beta_t,0) whose p-values sum above p((v,1)).
struct FlatnessCertificate {
    std::vector<int> beta0;
    std::vector<std::vector<int>> parts;  // the nonzero beta_t
    long long lhs = 0;                    // p((v,1))
    long long rhs = 0;                    // p((beta0,1)) + sum_t p((beta_t,0))
};

struct FlatnessReport {
    bool flat = true;
    std::optional<FlatnessCertificate> certificate;
    std::size_t dp_table_size = 0;
};

FlatnessReport is_flat(const QuiverData& q, const DimData& d);

}  // namespace nakamol

#pragma once

#include <string>
#include <vector>

#include "nakamol/series.hpp"

namespace nakamol {

// Weakly decreasing integer tuple; negative parts label determinant twists.
struct GLPartition {
    std::vector<int> parts;
    void validate() const;
    int length() const { return static_cast<int>(parts.size()); }
};

struct MultiPartition {
    std::vector<GLPartition> components;  // one per gauge vertex
    void validate(const std::vector<int>& v) const;
    bool all_zero() const;

    // Text syntax: semicolon-separated vertex blocks, comma-separated parts,
    // e.g. "1,0;-2,-2". An empty block is the length-0 partition.
    static MultiPartition parse(const std::string& text);
    std::string str() const;
};

// Generalised Schur Laurent polynomial s_lambda(x_{a,1..v_a}) on the given
// vertex's gauge variables, as an hbar-degree-0 series over reg.
TruncatedSeries schur_laurent(const GLPartition& lambda, const Registry& reg, int vertex,
                              int order);

// Product over vertices of the Schur factors: the character of V_lambda.
TruncatedSeries f_lambda(const MultiPartition& lambda, const Registry& reg, int order);

MultiPartition shift_large(const MultiPartition& lambda, const std::vector<int>& theta,
                           int m);
MultiPartition dual_partition(const MultiPartition& lambda);

// Schur value at rational points (used by the fixed-point oracles); the points
// must be pairwise distinct.
Rational schur_at(const GLPartition& lambda, const std::vector<Rational>& x);

}  // namespace nakamol

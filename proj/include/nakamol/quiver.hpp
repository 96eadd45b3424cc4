#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nakamol {

struct Arrow {
    std::string id;
    int source = 0;  // vertex index (declaration order)
    int target = 0;
};

// Finite directed graph; loops and multi-arrows allowed. Canonical vertex and
// arrow order is declaration order.
struct QuiverData {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int vertex_index(const std::string& id) const;  // -1 if absent
    void validate() const;

    static QuiverData a_type(int n);        // A_n path quiver: 1 -> 2 -> ... -> n
    static QuiverData loop_quiver(int m);   // one vertex, m loops (m=1: Jordan)
};

struct DimData {
    std::vector<int> v;  // gauge dimensions
    std::vector<int> w;  // framing dimensions
    void validate(const QuiverData& q) const;
    bool framing_all_zero() const;
};

struct ThetaVector {
    std::vector<int> theta;
};

// Q plus one vertex "inf" with w_a arrows inf -> a; dim-lift alpha = (v, 1).
struct InfinityQuiver {
    QuiverData base;
    std::vector<int> dim_lift;  // (v_1, ..., v_n, 1); empty if not requested
    int inf_vertex = 0;         // index of the added vertex
};

std::vector<std::vector<int>> adjacency_doubled(const QuiverData& q);
std::vector<std::vector<int>> cartan_matrix(const QuiverData& q);

long long smooth_dim(const QuiverData& q, const DimData& d);

// (dim M(Q,v,w), dim g_v)
std::pair<long long, long long> ambient_dims(const QuiverData& q, const DimData& d);

struct RegularityReport {
    bool regular = true;
    std::optional<std::vector<int>> witness;  // violating alpha when not regular
};
RegularityReport is_v_regular(const QuiverData& q, const std::vector<int>& v,
                              const ThetaVector& theta);

InfinityQuiver infinity_quiver(const QuiverData& q, const std::vector<int>& w,
                               const std::vector<int>* v = nullptr);

// p(beta) = 1 + sum_{arrows} beta_s beta_t - beta.beta, evaluated on the
// infinity quiver; beta must be componentwise >= 0.
long long p_value(const InfinityQuiver& gamma, const std::vector<int>& beta);

}  // namespace nakamol

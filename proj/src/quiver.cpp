#include "nakamol/quiver.hpp"

#include <set>
#include <stdexcept>

namespace nakamol {

int QuiverData::vertex_index(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i] == id) return i;
    return -1;
}

void QuiverData::validate() const {
    std::set<std::string> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size())
        throw std::invalid_argument("duplicate vertex ids");
    std::set<std::string> as;
    for (const auto& arr : arrows) {
        if (!arr.id.empty() && !as.insert(arr.id).second)
            throw std::invalid_argument("duplicate arrow id: " + arr.id);
        if (arr.source < 0 || arr.source >= num_vertices() || arr.target < 0 ||
            arr.target >= num_vertices())
            throw std::invalid_argument("arrow endpoint out of range");
    }
}

QuiverData QuiverData::a_type(int n) {
    QuiverData q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i)
        q.arrows.push_back({"e" + std::to_string(i + 1), i, i + 1});
    return q;
}

QuiverData QuiverData::loop_quiver(int m) {
    QuiverData q;
    q.vertices.push_back("1");
    for (int i = 0; i < m; ++i)
        q.arrows.push_back({"l" + std::to_string(i + 1), 0, 0});
    return q;
}

void DimData::validate(const QuiverData& q) const {
    if (static_cast<int>(v.size()) != q.num_vertices() ||
        static_cast<int>(w.size()) != q.num_vertices())
        throw std::invalid_argument("dimension vector length must equal vertex count");
    for (int x : v)
        if (x < 0) throw std::invalid_argument("negative gauge dimension");
    for (int x : w)
        if (x < 0) throw std::invalid_argument("negative framing dimension");
}

bool DimData::framing_all_zero() const {
    for (int x : w)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<int>> adjacency_doubled(const QuiverData& q) {
    const int n = q.num_vertices();
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (const auto& arr : q.arrows) {
        adj[arr.source][arr.target] += 1;
        adj[arr.target][arr.source] += 1;  // a loop contributes 2 on the diagonal
    }
    return adj;
}

std::vector<std::vector<int>> cartan_matrix(const QuiverData& q) {
    auto c = adjacency_doubled(q);
    const int n = q.num_vertices();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = 2 * (i == j) - c[i][j];
    return c;
}

static long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += 1LL * a[i] * b[i];
    return s;
}

static long long quad_form(const std::vector<std::vector<int>>& m,
                           const std::vector<int>& a) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) s += 1LL * m[i][j] * a[i] * a[j];
    return s;
}

long long smooth_dim(const QuiverData& q, const DimData& d) {
    d.validate(q);
    return 2 * dot(d.v, d.w) - quad_form(cartan_matrix(q), d.v);
}

std::pair<long long, long long> ambient_dims(const QuiverData& q, const DimData& d) {
    d.validate(q);
    long long dim_m = 2 * dot(d.v, d.w) + quad_form(adjacency_doubled(q), d.v);
    long long dim_g = 0;
    for (int x : d.v) dim_g += 1LL * x * x;
    return {dim_m, dim_g};
}

RegularityReport is_v_regular(const QuiverData& q, const std::vector<int>& v,
                              const ThetaVector& theta) {
    const int n = q.num_vertices();
    if (static_cast<int>(v.size()) != n || static_cast<int>(theta.theta.size()) != n)
        throw std::invalid_argument("vector length must equal vertex count");
    auto cq = cartan_matrix(q);
    std::vector<int> alpha(n, 0);
    // enumerate the box 0 <= alpha <= v, skipping 0
    while (true) {
        int i = 0;
        while (i < n && alpha[i] == v[i]) alpha[i++] = 0;
        if (i == n) break;
        ++alpha[i];
        if (quad_form(cq, alpha) <= 2 && dot(theta.theta, alpha) == 0)
            return {false, alpha};
    }
    return {true, std::nullopt};
}

InfinityQuiver infinity_quiver(const QuiverData& q, const std::vector<int>& w,
                               const std::vector<int>* v) {
    if (static_cast<int>(w.size()) != q.num_vertices())
        throw std::invalid_argument("framing vector length must equal vertex count");
    InfinityQuiver out;
    out.base = q;
    out.inf_vertex = q.num_vertices();
    out.base.vertices.push_back("inf");
    for (int a = 0; a < q.num_vertices(); ++a)
        for (int k = 0; k < w[a]; ++k)
            out.base.arrows.push_back(
                {"f" + std::to_string(a + 1) + "_" + std::to_string(k + 1), out.inf_vertex, a});
    if (v) {
        out.dim_lift = *v;
        out.dim_lift.push_back(1);
    }
    return out;
}

long long p_value(const InfinityQuiver& gamma, const std::vector<int>& beta) {
    const auto& q = gamma.base;
    if (static_cast<int>(beta.size()) != q.num_vertices())
        throw std::invalid_argument("beta length must equal vertex count of the lifted quiver");
    for (int b : beta)
        if (b < 0) throw std::invalid_argument("beta must be componentwise >= 0");
    long long s = 1;
    for (const auto& arr : q.arrows) s += 1LL * beta[arr.source] * beta[arr.target];
    for (int b : beta) s -= 1LL * b * b;
    return s;
}

}  // namespace nakamol

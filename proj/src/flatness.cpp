#include "nakamol/flatness.hpp"

#include <limits>
#include <stdexcept>

namespace nakamol {

namespace {

// Mixed-radix indexing of the box prod [0, v_a].
struct Box {
    std::vector<int> dims;  // v_a + 1 per coordinate
    std::size_t size = 1;
    explicit Box(const std::vector<int>& v) {
        for (int x : v) {
            dims.push_back(x + 1);
            size *= static_cast<std::size_t>(x + 1);
        }
    }
    std::size_t index(const std::vector<int>& u) const {
        std::size_t idx = 0;
        for (std::size_t i = dims.size(); i-- > 0;) idx = idx * dims[i] + u[i];
        return idx;
    }
    std::vector<int> vector(std::size_t idx) const {
        std::vector<int> u(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i) {
            u[i] = static_cast<int>(idx % dims[i]);
            idx /= dims[i];
        }
        return u;
    }
};

bool next_in_box(std::vector<int>& u, const std::vector<int>& hi) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < hi[i]) {
            ++u[i];
            return true;
        }
        u[i] = 0;
    }
    return false;
}

bool is_zero(const std::vector<int>& u) {
    for (int x : u)
        if (x != 0) return false;
    return true;
}

}  // namespace

FlatnessReport is_flat(const QuiverData& q, const DimData& d) {
    d.validate(q);
    const int n = q.num_vertices();
    auto gamma = infinity_quiver(q, d.w, &d.v);

    auto p0 = [&](const std::vector<int>& beta) {  // p((beta, 0))
        std::vector<int> lift = beta;
        lift.push_back(0);
        return p_value(gamma, lift);
    };
    auto p1 = [&](const std::vector<int>& beta) {  // p((beta, 1))
        std::vector<int> lift = beta;
        lift.push_back(1);
        return p_value(gamma, lift);
    };

    Box box(d.v);
    if (box.size > std::size_t(4) << 20)
        throw std::runtime_error("flatness DP box too large");

    // best[u] = max over decompositions of u into nonzero parts of sum p((part,0));
    // arg[u] records the last part chosen (box index), SIZE_MAX at u = 0.
    const long long neg_inf = std::numeric_limits<long long>::min();
    std::vector<long long> best(box.size, neg_inf);
    std::vector<std::size_t> arg(box.size, std::numeric_limits<std::size_t>::max());
    best[0] = 0;

    std::vector<int> u(n, 0);
    do {
        if (is_zero(u)) continue;
        std::size_t ui = box.index(u);
        // last part beta: 0 < beta <= u
        std::vector<int> beta(n, 0);
        while (next_in_box(beta, u)) {
            std::vector<int> rest(n);
            for (int i = 0; i < n; ++i) rest[i] = u[i] - beta[i];
            std::size_t ri = box.index(rest);
            if (best[ri] == neg_inf) continue;
            long long cand = best[ri] + p0(beta);
            if (cand > best[ui]) {
                best[ui] = cand;
                arg[ui] = box.index(beta);
            }
        }
    } while (next_in_box(u, d.v));

    FlatnessReport report;
    report.dp_table_size = box.size;
    const long long lhs = p1(d.v);

    std::vector<int> beta0(n, 0);
    do {
        std::vector<int> rest(n);
        for (int i = 0; i < n; ++i) rest[i] = d.v[i] - beta0[i];
        std::size_t ri = box.index(rest);
        if (best[ri] == neg_inf) continue;
        long long rhs = p1(beta0) + best[ri];
        if (rhs > lhs) {
            FlatnessCertificate cert;
            cert.beta0 = beta0;
            cert.lhs = lhs;
            cert.rhs = rhs;
            // unwind the argmax chain
            std::size_t cur = ri;
            while (!is_zero(box.vector(cur))) {
                auto part = box.vector(arg[cur]);
                auto curv = box.vector(cur);
                std::vector<int> nxt(n);
                for (int i = 0; i < n; ++i) nxt[i] = curv[i] - part[i];
                cert.parts.push_back(part);
                cur = box.index(nxt);
            }
            report.flat = false;
            report.certificate = cert;
            return report;
        }
    } while (next_in_box(beta0, d.v));

    return report;
}

}  // namespace nakamol

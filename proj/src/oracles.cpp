#include "nakamol/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nakamol {

std::uint64_t PointDrawer::next_raw() {
    // splitmix64 step: deterministic across platforms.
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rational PointDrawer::next() {
    const long long num = 2 + static_cast<long long>(next_raw() % 61);
    const long long den = 1 + static_cast<long long>(next_raw() % 7);
    return Rational(num, den);
}

std::vector<Rational> PointDrawer::distinct(int count) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational r = next();
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

namespace {

// One fixed-point term: rational prefactor and the h-geometric denominators
// 1/(1 - c h); returns the h-power series of the term to order_h.
std::vector<Rational> geom_product(const Rational& prefactor,
                                   const std::vector<Rational>& cs, int order_h) {
    std::vector<Rational> poly(order_h + 1, Rational(0));
    poly[0] = prefactor;
    for (const auto& c : cs)
        for (int k = 1; k <= order_h; ++k) poly[k] += c * poly[k - 1];
    return poly;
}

template <typename TermFn>
void for_each_subset(int v, int w, TermFn&& fn) {
    std::vector<int> comb(v);
    std::iota(comb.begin(), comb.end(), 0);
    if (v > w) throw std::invalid_argument("subset size exceeds the ground set");
    if (v == 0) {
        fn(comb);
        return;
    }
    while (true) {
        fn(comb);
        int i = v - 1;
        while (i >= 0 && comb[i] == w - v + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < v; ++j) comb[j] = comb[j - 1] + 1;
    }
}

struct SumPieces {
    std::vector<Rational> series;      // h-coefficients 0..order_h
    bool want_exact = false;
    Rational exact_value = 0;          // value at a rational h
};

// chamber = +1: (1 - a_b/a_g)(1 - h a_g/a_b); chamber = -1: ratios swapped.
SumPieces subset_sum(int v, int w, const GLPartition* lambda,
                     const std::vector<Rational>& a, int order_h, int chamber,
                     const Rational* hbar) {
    if (static_cast<int>(a.size()) != w)
        throw std::invalid_argument("need one rational per framing weight");
    for (const auto& r : a)
        if (r == 0) throw std::domain_error("zero framing value");
    SumPieces out;
    out.series.assign(order_h + 1, Rational(0));
    out.want_exact = hbar != nullptr;
    for_each_subset(v, w, [&](const std::vector<int>& comb) {
        std::vector<bool> inb(w, false);
        for (int b : comb) inb[b] = true;
        Rational pref = 1;
        if (lambda) {
            std::vector<Rational> ab;
            for (int b : comb) ab.push_back(a[b]);
            pref = schur_at(*lambda, ab);
        }
        std::vector<Rational> cs;
        for (int b : comb)
            for (int g = 0; g < w; ++g) {
                if (inb[g]) continue;
                Rational r1 = chamber > 0 ? a[b] / a[g] : a[g] / a[b];
                if (r1 == 1) throw std::domain_error("pole: coincident ratio");
                pref /= (1 - r1);
                cs.push_back(chamber > 0 ? a[g] / a[b] : a[b] / a[g]);
            }
        auto poly = geom_product(pref, cs, order_h);
        for (int k = 0; k <= order_h; ++k) out.series[k] += poly[k];
        if (out.want_exact) {
            Rational term = pref;
            for (const auto& c : cs) {
                Rational f = 1 - (*hbar) * c;
                if (f == 0) throw std::domain_error("pole: denominator vanishes at hbar");
                term /= f;
            }
            out.exact_value += term;
        }
    });
    return out;
}

}  // namespace

TruncatedSeries grassmann_fixed_sum(int v, int w, const GLPartition& lambda,
                                    const std::vector<Rational>& a, int order_h) {
    if (order_h < 0) throw std::invalid_argument("order must be >= 0");
    auto sum = subset_sum(v, w, &lambda, a, order_h, +1, nullptr);
    auto reg = VarRegistry::custom({}, {});
    TruncatedSeries out(reg, 2 * order_h);
    for (int k = 0; k <= order_h; ++k) {
        Exponents e(2, 0);
        e[0] = k;
        e[1] = k;
        out.add_term(e, sum.series[k]);
    }
    return out;
}

bool wall_identity_check(int v, int w, const std::vector<Rational>& a,
                         const Rational& hbar, int order_h) {
    GLPartition zero;
    zero.parts.assign(v, 0);
    auto lhs = subset_sum(v, w, nullptr, a, order_h, +1, &hbar);
    auto rhs = subset_sum(v, w, nullptr, a, order_h, -1, &hbar);
    return lhs.series == rhs.series && lhs.exact_value == rhs.exact_value;
}

TruncatedSeries ade_closed_form(int n, int order, Registry reg, int idx_a, int idx_at) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (!reg) {
        reg = VarRegistry::custom({"a", "at"}, {VarKind::Framing, VarKind::Framing});
        idx_a = 0;
        idx_at = 1;
    }
    if (idx_a < 0 || idx_at < 0 || idx_a >= reg->size() || idx_at >= reg->size())
        throw std::invalid_argument("bad variable indices for the closed form");
    TruncatedSeries num(reg, order);
    for (int k = 0; k < n; ++k) {
        Exponents e(reg->size(), 0);
        e[reg->h1()] = k;
        e[reg->h2()] = k;
        num.add_term(e, 1);
    }
    Exponents s1(reg->size(), 0), s2(reg->size(), 0);
    s1[reg->h1()] = n - 1;
    s1[reg->h2()] = 1;
    s1[idx_a] = 1;
    s1[idx_at] = -1;
    s2[reg->h1()] = 1;
    s2[reg->h2()] = n - 1;
    s2[idx_at] = 1;
    s2[idx_a] = -1;
    return num * geom_expand(reg, s1, -1, order) * geom_expand(reg, s2, -1, order);
}

std::optional<TruncatedSeries> jordan_v1_closed_form(int w, int order) {
    if (w < 1) throw std::invalid_argument("w must be >= 1");
    if (w > 1) return std::nullopt;
    auto reg = VarRegistry::custom({}, {});
    TruncatedSeries out(reg, order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            Exponents e(2, 0);
            e[0] = i;
            e[1] = j;
            out.add_term(e, 1);
        }
    return out;
}

}  // namespace nakamol

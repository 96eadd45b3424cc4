#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nakamol/schur.hpp"
#include "nakamol/series.hpp"

namespace nakamol {

// Deterministic generic-point source: small nonzero rationals, distinct within
// one draw; a rejected (pole-hitting) draw is simply redrawn from the stream.
class PointDrawer {
public:
    explicit PointDrawer(std::uint64_t seed) : state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    Rational next();
    std::vector<Rational> distinct(int count);

private:
    std::uint64_t next_raw();
    std::uint64_t state_;
};

// Fixed-point sum over v-element subsets B of the w framing weights:
//   sum_B s_lambda(a_B) / prod_{b in B, g not in B} (1 - a_b/a_g)(1 - h a_g/a_b),
// expanded in powers of the single parameter h (= h1 h2) to order_h. The
// result lives over the hbar-only registry with h^k stored as h1^k h2^k.
// Throws std::domain_error on a pole (coincident ratios).
TruncatedSeries grassmann_fixed_sum(int v, int w, const GLPartition& lambda,
                                    const std::vector<Rational>& a, int order_h);

// Equality of the two opposite-chamber fixed-point sums, both degreewise as
// series to order_h and exactly at the given rational h.
bool wall_identity_check(int v, int w, const std::vector<Rational>& a,
                         const Rational& hbar, int order_h);

// Expansion of [sum_{k=0}^{n-1} (h1 h2)^k] /
// [(1 - h1^{n-1} h2 * a/at)(1 - h1 h2^{n-1} * at/a)] to hbar-degree <= order.
// By default over a registry with framing variables {a, at}; a caller may pass
// its own registry together with the indices playing the roles of a and at.
TruncatedSeries ade_closed_form(int n, int order, Registry reg = nullptr,
                                int idx_a = -1, int idx_at = -1);

// v=1 closed form 1/((1-h1)(1-h2)) for w=1; w>1 has no adopted closed form and
// returns nullopt (unsupported-oracle signal).
std::optional<TruncatedSeries> jordan_v1_closed_form(int w, int order);

}  // namespace nakamol

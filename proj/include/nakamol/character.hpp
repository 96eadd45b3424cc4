#pragma once

#include <optional>

#include "nakamol/quiver.hpp"
#include "nakamol/schur.hpp"
#include "nakamol/series.hpp"

namespace nakamol {

// Torus weights of M(Q,v,w)^* (matter, the s_j) and of g_v (gauge, the r_i).
struct WeightTables {
    Registry reg;
    std::vector<Exponents> matter;
    std::vector<Exponents> gauge;
};

WeightTables weight_tables(const QuiverData& q, const DimData& d);

// Molien-Weyl integrand: prod (1 - hbar1 hbar2 r) * Delta(x) * insertion
// over prod (1 - s), to be averaged over the gauge torus.
struct Integrand {
    Registry reg;
    std::vector<Exponents> numerator;     // factors (1 - u)
    std::vector<Exponents> denominator;   // factors 1/(1 - s)
    std::vector<Exponents> weyl;          // factors (1 - x_i x_j^-1), i != j
    long long weyl_order = 1;             // |W| = prod v_a!
    std::optional<TruncatedSeries> insertion;
};

Integrand build_integrand(const WeightTables& t,
                          std::optional<TruncatedSeries> insertion = std::nullopt);

struct MolienOptions {
    // Expansion cap for hbar-degree-0 denominator factors; -1 means the
    // default D + (#numerator factors + #Weyl factors).
    int jtype_cap = -1;
    // When set, framing variables are evaluated at these rationals and the
    // result is a series in hbar only.
    std::optional<std::map<std::string, Rational>> framing_values;
};

// Equivariant Hilbert series of the affine Nakajima variety, truncated at
// total hbar-degree <= order. Output registry: framing variables + hbar
// (hbar only when framing_values is set).
TruncatedSeries molien_series(const QuiverData& q, const DimData& d, int order,
                              const MolienOptions& opts = {});

// Same with the Schur insertion f_lambda(x); the tautological-sheaf reading
// requires largeness of lambda, which is never auto-certified here.
TruncatedSeries taut_character(const QuiverData& q, const DimData& d,
                               const MultiPartition& lambda, int order,
                               const MolienOptions& opts = {});

// Shared constant-term pipeline, exposed for tests and the Euler bridge.
TruncatedSeries integrate_molien(const Integrand& ig, int order, int jtype_cap = -1,
                                 const std::optional<std::map<std::string, Rational>>&
                                     framing_values = std::nullopt);

struct EulerCrosscheckReport {
    bool ok = true;
    std::string mismatch;  // description of the first mismatch, if any
    std::size_t compared = 0;
};

// Per multidegree (with a weighted-degree marker), compares the Koszul-chain
// Euler characteristic with the expansion of prod(1 - h1 h2 r)/prod(1 - s).
EulerCrosscheckReport euler_crosscheck(const QuiverData& q, const DimData& d, int dmax);

}  // namespace nakamol

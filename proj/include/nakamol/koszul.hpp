#pragma once

#include <map>
#include <vector>

#include "nakamol/quiver.hpp"
#include "nakamol/series.hpp"

namespace nakamol {

// Coordinate function on M(Q,v,w) with its torus weight.
struct Coordinate {
    enum class Role { X, Y, I, J };
    Role role;
    int arrow = -1;   // index into q.arrows for X/Y
    int vertex = -1;  // for I/J
    int row = 0, col = 0;
    Exponents weight;
    std::string name;
};

struct CoordinateRing {
    Registry reg;
    std::vector<Coordinate> generators;
};

CoordinateRing coordinate_ring(const QuiverData& q, const DimData& d);

// Quadratic polynomial in the coordinates: sparse sum of degree-2 monomials.
struct QuadPoly {
    // (coeff, generator index, generator index) triples; the product is commutative.
    std::vector<std::tuple<int, int, int>> terms;
    Exponents weight;  // common torus weight (hbar-weight h1 h2)
};

// Entries (mu_a)_{ij} of the moment map, flattened per vertex in row-major
// order; count = sum v_a^2.
std::vector<QuadPoly> moment_polys(const QuiverData& q, const DimData& d,
                                   const CoordinateRing& ring);

struct KoszulPiece {
    int weighted_degree = 0;          // polynomial degree + 2 * exterior degree
    Exponents multidegree;            // full torus weight of the block
    std::vector<int> chain_dims;      // dim C_i for i = 0..dim g
    std::vector<int> homology_dims;   // dim H_i
};

struct HomologyScan {
    std::vector<KoszulPiece> pieces;  // sorted by (weighted degree, multidegree)
    int dmax = 0;
    // Totals per weighted degree: [i] summed over multidegrees.
    std::map<int, std::vector<int>> homology_by_degree;
};

// Exact multigraded Koszul homology up to the weighted-degree bound. Guarded by
// an explicit basis-size estimate.
HomologyScan homology_scan(const QuiverData& q, const DimData& d, int dmax,
                           std::size_t basis_guard = std::size_t(1) << 22);

// Character of H_0 = O(mu^-1(0)) over the full registry, complete for
// polynomial degrees <= dmax.
TruncatedSeries h0_character(const QuiverData& q, const DimData& d, int dmax);

// Fraction-free rank of an integer matrix (exact).
int exact_rank(std::vector<std::vector<Int>> m);

}  // namespace nakamol

#include "nakamol/koszul.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nakamol {

CoordinateRing coordinate_ring(const QuiverData& q, const DimData& d) {
    q.validate();
    d.validate(q);
    CoordinateRing ring;
    ring.reg = VarRegistry::for_quiver(d.v, d.w, q.vertices);
    const auto& reg = *ring.reg;
    auto wmono = [&](int pos_idx, int neg_idx, int dh1, int dh2) {
        Exponents e(reg.size(), 0);
        e[pos_idx] += 1;
        e[neg_idx] -= 1;
        e[reg.h1()] += dh1;
        e[reg.h2()] += dh2;
        return e;
    };
    for (int g = 0; g < static_cast<int>(q.arrows.size()); ++g) {
        const auto& arr = q.arrows[g];
        const int u = arr.source, t = arr.target;
        for (int i = 0; i < d.v[u]; ++i)
            for (int j = 0; j < d.v[t]; ++j) {
                Coordinate X;
                X.role = Coordinate::Role::X;
                X.arrow = g;
                X.row = j;  // index in V_target
                X.col = i;  // index in V_source
                X.weight = wmono(reg.x(u, i), reg.x(t, j), 1, 0);
                X.name = "X_" + arr.id + "[" + std::to_string(j + 1) + "," +
                         std::to_string(i + 1) + "]";
                ring.generators.push_back(std::move(X));
                Coordinate Y;
                Y.role = Coordinate::Role::Y;
                Y.arrow = g;
                Y.row = i;  // index in V_source (reversed arrow)
                Y.col = j;  // index in V_target
                Y.weight = wmono(reg.x(t, j), reg.x(u, i), 0, 1);
                Y.name = "Y_" + arr.id + "[" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + "]";
                ring.generators.push_back(std::move(Y));
            }
    }
    for (int a = 0; a < q.num_vertices(); ++a)
        for (int k = 0; k < d.w[a]; ++k)
            for (int i = 0; i < d.v[a]; ++i) {
                Coordinate I;
                I.role = Coordinate::Role::I;
                I.vertex = a;
                I.row = i;
                I.col = k;
                I.weight = wmono(reg.a(a, k), reg.x(a, i), 1, 1);
                I.name = "I_" + q.vertices[a] + "[" + std::to_string(i + 1) + "," +
                         std::to_string(k + 1) + "]";
                ring.generators.push_back(std::move(I));
                Coordinate J;
                J.role = Coordinate::Role::J;
                J.vertex = a;
                J.row = k;
                J.col = i;
                J.weight = wmono(reg.x(a, i), reg.a(a, k), 0, 0);
                J.name = "J_" + q.vertices[a] + "[" + std::to_string(k + 1) + "," +
                         std::to_string(i + 1) + "]";
                ring.generators.push_back(std::move(J));
            }
    return ring;
}

namespace {

struct GenLookup {
    // (role, arrow-or-vertex, row, col) -> generator index
    std::map<std::tuple<int, int, int, int>, int> idx;
    int get(Coordinate::Role role, int owner, int row, int col) const {
        auto it = idx.find({static_cast<int>(role), owner, row, col});
        if (it == idx.end()) throw std::logic_error("missing coordinate generator");
        return it->second;
    }
};

GenLookup make_lookup(const CoordinateRing& ring) {
    GenLookup lk;
    for (int g = 0; g < static_cast<int>(ring.generators.size()); ++g) {
        const auto& c = ring.generators[g];
        int owner = c.role == Coordinate::Role::X || c.role == Coordinate::Role::Y
                        ? c.arrow
                        : c.vertex;
        lk.idx[{static_cast<int>(c.role), owner, c.row, c.col}] = g;
    }
    return lk;
}

}  // namespace

std::vector<QuadPoly> moment_polys(const QuiverData& q, const DimData& d,
                                   const CoordinateRing& ring) {
    const auto& reg = *ring.reg;
    auto lk = make_lookup(ring);
    std::vector<QuadPoly> out;
    for (int a = 0; a < q.num_vertices(); ++a) {
        for (int i = 0; i < d.v[a]; ++i)
            for (int j = 0; j < d.v[a]; ++j) {
                QuadPoly p;
                p.weight.assign(reg.size(), 0);
                p.weight[reg.x(a, j)] += 1;
                p.weight[reg.x(a, i)] -= 1;
                p.weight[reg.h1()] += 1;
                p.weight[reg.h2()] += 1;
                for (int g = 0; g < static_cast<int>(q.arrows.size()); ++g) {
                    const auto& arr = q.arrows[g];
                    if (arr.target == a) {  // (X_g Y_g)_{ij}
                        for (int k = 0; k < d.v[arr.source]; ++k)
                            p.terms.emplace_back(1, lk.get(Coordinate::Role::X, g, i, k),
                                                 lk.get(Coordinate::Role::Y, g, k, j));
                    }
                    if (arr.source == a) {  // -(Y_g X_g)_{ij}
                        for (int k = 0; k < d.v[arr.target]; ++k)
                            p.terms.emplace_back(-1, lk.get(Coordinate::Role::Y, g, i, k),
                                                 lk.get(Coordinate::Role::X, g, k, j));
                    }
                }
                for (int k = 0; k < d.w[a]; ++k)
                    p.terms.emplace_back(1, lk.get(Coordinate::Role::I, a, i, k),
                                         lk.get(Coordinate::Role::J, a, k, j));
                out.push_back(std::move(p));
            }
    }
    return out;
}

namespace {

using Mono = std::vector<std::int16_t>;  // exponents over the coordinate generators

struct Elem {
    Mono mono;
    std::uint64_t mask;
    bool operator<(const Elem& o) const {
        return mask != o.mask ? mask < o.mask : mono < o.mono;
    }
};

struct Block {
    // One basis list per exterior level, with positional indices.
    std::map<int, std::vector<Elem>> levels;
    std::map<int, std::map<Elem, int>> index;
};

void enumerate_monos(int ngen, int deg, std::vector<Mono>& out, std::size_t guard) {
    Mono cur(ngen, 0);
    // Odometer over weak compositions of deg into ngen parts.
    std::vector<int> stack;
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == ngen - 1) {
            cur[pos] = static_cast<std::int16_t>(rem);
            if (out.size() >= guard)
                throw std::runtime_error("basis guard exceeded in the homology scan");
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            cur[pos] = static_cast<std::int16_t>(k);
            rec(pos + 1, rem - k);
        }
        cur[pos] = 0;
    };
    if (ngen == 0) {
        if (deg == 0) out.push_back(cur);
        return;
    }
    rec(0, deg);
}

void enumerate_masks(int G, int size, std::vector<std::uint64_t>& out) {
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    if (size > G) return;
    while (true) {
        std::uint64_t m = 0;
        for (int c : comb) m |= (std::uint64_t(1) << c);
        out.push_back(m);
        int i = size - 1;
        while (i >= 0 && comb[i] == G - size + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
}

}  // namespace

int exact_rank(std::vector<std::vector<Int>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const int R = static_cast<int>(m.size());
    const int C = static_cast<int>(m[0].size());
    int rank = 0, row = 0;
    Int prev = 1;
    for (int col = 0; col < C && row < R; ++col) {
        int piv = -1;
        for (int r = row; r < R; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        for (int r = row + 1; r < R; ++r) {
            for (int cc = col + 1; cc < C; ++cc)
                m[r][cc] = (m[row][col] * m[r][cc] - m[r][col] * m[row][cc]) / prev;
            m[r][col] = 0;
        }
        prev = m[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

HomologyScan homology_scan(const QuiverData& q, const DimData& d, int dmax,
                           std::size_t basis_guard) {
    if (dmax < 0) throw std::invalid_argument("degree bound must be >= 0");
    auto ring = coordinate_ring(q, d);
    auto mus = moment_polys(q, d, ring);
    const auto& reg = *ring.reg;
    const int N = static_cast<int>(ring.generators.size());
    const int G = static_cast<int>(mus.size());
    if (G > 63) throw std::runtime_error("gauge dimension too large for the homology scan");

    // Monomial bases per polynomial degree, with cached torus weights.
    std::vector<std::vector<Mono>> monos(dmax + 1);
    std::size_t total = 0;
    for (int deg = 0; deg <= dmax; ++deg) {
        enumerate_monos(N, deg, monos[deg], basis_guard);
        total += monos[deg].size();
        if (total > basis_guard)
            throw std::runtime_error("basis guard exceeded in the homology scan");
    }
    auto mono_weight = [&](const Mono& m) {
        Exponents w(reg.size(), 0);
        for (int g = 0; g < N; ++g) {
            if (m[g] == 0) continue;
            for (int i = 0; i < reg.size(); ++i)
                w[i] += m[g] * ring.generators[g].weight[i];
        }
        return w;
    };

    std::map<std::pair<int, Exponents>, Block> blocks;
    for (int wd = 0; wd <= dmax; ++wd) {
        for (int level = 0; 2 * level <= wd && level <= G; ++level) {
            const int pdeg = wd - 2 * level;
            std::vector<std::uint64_t> masks;
            enumerate_masks(G, level, masks);
            for (const auto& m : monos[pdeg]) {
                Exponents base = mono_weight(m);
                for (std::uint64_t mask : masks) {
                    Exponents md = base;
                    for (int k = 0; k < G; ++k)
                        if (mask & (std::uint64_t(1) << k))
                            for (int i = 0; i < reg.size(); ++i) md[i] += mus[k].weight[i];
                    auto& blk = blocks[{wd, md}];
                    Elem e{m, mask};
                    blk.index[level].emplace(e, static_cast<int>(blk.levels[level].size()));
                    blk.levels[level].push_back(std::move(e));
                }
            }
        }
    }

    HomologyScan scan;
    scan.dmax = dmax;
    for (auto& [key, blk] : blocks) {
        const int maxlevel = blk.levels.rbegin()->first;
        std::vector<int> ranks(maxlevel + 2, 0);
        std::vector<std::vector<std::vector<Int>>> mats(maxlevel + 1);
        for (int level = 1; level <= maxlevel; ++level) {
            auto src_it = blk.levels.find(level);
            auto dst_it = blk.levels.find(level - 1);
            if (src_it == blk.levels.end()) continue;
            const auto& src = src_it->second;
            const int rows = dst_it == blk.levels.end()
                                 ? 0
                                 : static_cast<int>(dst_it->second.size());
            std::vector<std::vector<Int>> mat(rows,
                                              std::vector<Int>(src.size(), Int(0)));
            static const std::map<Elem, int> empty_index;
            const auto& dst_index =
                dst_it == blk.levels.end() ? empty_index : blk.index[level - 1];
            for (int col = 0; col < static_cast<int>(src.size()); ++col) {
                const auto& el = src[col];
                int pos = 0;
                for (int k = 0; k < G; ++k) {
                    if (!(el.mask & (std::uint64_t(1) << k))) continue;
                    const int sign = (pos % 2 == 0) ? 1 : -1;
                    ++pos;
                    const std::uint64_t nmask = el.mask & ~(std::uint64_t(1) << k);
                    for (const auto& [c, g1, g2] : mus[k].terms) {
                        Mono nm = el.mono;
                        nm[g1] += 1;
                        nm[g2] += 1;
                        auto it = dst_index.find(Elem{std::move(nm), nmask});
                        if (it == dst_index.end())
                            throw std::logic_error("differential left its block");
                        mat[it->second][col] += sign * c;
                    }
                }
            }
            // d o d = 0 on this block
            if (level >= 2 && !mats[level - 1].empty() && !mat.empty()) {
                const auto& a = mats[level - 1];
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = 0; j < mat[0].size(); ++j) {
                        Int s = 0;
                        for (std::size_t k = 0; k < mat.size(); ++k)
                            s += a[i][k] * mat[k][j];
                        if (s != 0) throw std::logic_error("d o d != 0 on a Koszul block");
                    }
            }
            ranks[level] = exact_rank(mat);
            mats[level] = std::move(mat);
        }
        KoszulPiece piece;
        piece.weighted_degree = key.first;
        piece.multidegree = key.second;
        piece.chain_dims.assign(G + 1, 0);
        piece.homology_dims.assign(G + 1, 0);
        for (const auto& [level, list] : blk.levels)
            piece.chain_dims[level] = static_cast<int>(list.size());
        for (int level = 0; level <= maxlevel; ++level) {
            const int h = piece.chain_dims[level] - ranks[level] - ranks[level + 1];
            if (h < 0) throw std::logic_error("negative homology dimension computed");
            piece.homology_dims[level] = h;
        }
        auto& totals = scan.homology_by_degree[piece.weighted_degree];
        if (totals.empty()) totals.assign(G + 1, 0);
        for (int level = 0; level <= G; ++level)
            totals[level] += piece.homology_dims[level];
        scan.pieces.push_back(std::move(piece));
    }
    return scan;
}

TruncatedSeries h0_character(const QuiverData& q, const DimData& d, int dmax) {
    auto scan = homology_scan(q, d, dmax);
    auto reg = VarRegistry::for_quiver(d.v, d.w, q.vertices);
    TruncatedSeries out(reg, 2 * dmax);
    for (const auto& piece : scan.pieces)
        if (piece.homology_dims[0] != 0)
            out.add_term(piece.multidegree, Rational(piece.homology_dims[0]));
    return out;
}

}  // namespace nakamol

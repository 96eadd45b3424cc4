#include "nakamol/character.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "nakamol/koszul.hpp"

namespace nakamol {

WeightTables weight_tables(const QuiverData& q, const DimData& d) {
    q.validate();
    d.validate(q);
    WeightTables t;
    t.reg = VarRegistry::for_quiver(d.v, d.w, q.vertices);
    const auto& reg = *t.reg;
    const int n = reg.size();
    auto mono = [&](std::initializer_list<std::pair<int, int>> entries, int dh1, int dh2) {
        Exponents e(n, 0);
        for (auto [idx, val] : entries) e[idx] += val;
        e[reg.h1()] += dh1;
        e[reg.h2()] += dh2;
        return e;
    };
    for (const auto& arr : q.arrows) {
        const int u = arr.source, v = arr.target;
        for (int i = 0; i < d.v[u]; ++i)
            for (int j = 0; j < d.v[v]; ++j) {
                t.matter.push_back(mono({{reg.x(u, i), 1}, {reg.x(v, j), -1}}, 1, 0));
                t.matter.push_back(mono({{reg.x(v, j), 1}, {reg.x(u, i), -1}}, 0, 1));
            }
    }
    for (int a = 0; a < q.num_vertices(); ++a)
        for (int k = 0; k < d.w[a]; ++k)
            for (int i = 0; i < d.v[a]; ++i) {
                t.matter.push_back(mono({{reg.a(a, k), 1}, {reg.x(a, i), -1}}, 1, 1));
                t.matter.push_back(mono({{reg.x(a, i), 1}, {reg.a(a, k), -1}}, 0, 0));
            }
    for (int a = 0; a < q.num_vertices(); ++a)
        for (int i = 0; i < d.v[a]; ++i)
            for (int j = 0; j < d.v[a]; ++j)
                t.gauge.push_back(mono({{reg.x(a, i), 1}, {reg.x(a, j), -1}}, 0, 0));
    return t;
}

Integrand build_integrand(const WeightTables& t, std::optional<TruncatedSeries> insertion) {
    Integrand ig;
    ig.reg = t.reg;
    const auto& reg = *t.reg;
    for (const auto& r : t.gauge) {
        Exponents u = r;
        u[reg.h1()] += 1;
        u[reg.h2()] += 1;
        ig.numerator.push_back(u);
    }
    ig.denominator = t.matter;
    for (int a = 0; a < reg.num_vertices(); ++a) {
        for (int i = 0; i < reg.vdim(a); ++i) {
            for (int j = 0; j < reg.vdim(a); ++j) {
                if (i == j) continue;
                Exponents e(reg.size(), 0);
                e[reg.x(a, i)] = 1;
                e[reg.x(a, j)] = -1;
                ig.weyl.push_back(e);
            }
        }
        long long fact = 1;
        for (int k = 2; k <= reg.vdim(a); ++k) fact *= k;
        ig.weyl_order *= fact;
    }
    if (insertion) {
        if (!insertion->registry()->same_as(reg))
            throw std::invalid_argument("insertion registry mismatch");
        for (const auto& [m, c] : insertion->terms()) {
            (void)c;
            for (int i = 0; i < reg.size(); ++i)
                if (m[i] != 0 && reg.kind(i) != VarKind::Gauge)
                    throw std::invalid_argument("insertion must use gauge variables only");
        }
        ig.insertion = std::move(insertion);
    }
    return ig;
}

namespace {

struct Factor {
    std::vector<std::pair<Exponents, Rational>> terms;
    int max_gauge = -1;  // highest working-registry gauge index occurring
};

// Evaluates the framing part of a full-registry monomial and maps the rest
// onto the working registry (identity when no assignment is given).
struct Mapper {
    Registry full;
    Registry work;
    std::vector<int> to_work;              // full index -> work index, -1 = evaluated
    std::vector<Rational> framing_value;   // per full index

    std::pair<Exponents, Rational> map(const Exponents& m) const {
        Exponents e(work->size(), 0);
        Rational c = 1;
        for (int i = 0; i < full->size(); ++i) {
            if (m[i] == 0) continue;
            if (to_work[i] >= 0) {
                e[to_work[i]] = m[i];
            } else {
                const Rational& val = framing_value[i];
                if (val == 0)
                    throw std::invalid_argument("zero framing value for " + full->name(i));
                c *= rat_pow(val, m[i]);
            }
        }
        return {std::move(e), std::move(c)};
    }
};

Mapper make_mapper(const Registry& full,
                   const std::optional<std::map<std::string, Rational>>& framing_values) {
    Mapper mp;
    mp.full = full;
    mp.to_work.assign(full->size(), -1);
    mp.framing_value.assign(full->size(), Rational(0));
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    for (int i = 0; i < full->size(); ++i) {
        if (full->kind(i) == VarKind::Hbar) continue;
        bool evaluate = framing_values && full->kind(i) == VarKind::Framing;
        if (evaluate) {
            auto it = framing_values->find(full->name(i));
            if (it == framing_values->end())
                throw std::invalid_argument("missing framing value for " + full->name(i));
            mp.framing_value[i] = it->second;
        } else {
            mp.to_work[i] = static_cast<int>(names.size());
            names.push_back(full->name(i));
            kinds.push_back(full->kind(i));
        }
    }
    mp.work = VarRegistry::custom(names, kinds);
    for (int i = 0; i < full->size(); ++i)
        if (full->kind(i) == VarKind::Hbar)
            mp.to_work[i] = mp.work->find(full->name(i));
    return mp;
}

int max_gauge_index(const Factor& f, const VarRegistry& work) {
    int mg = -1;
    for (const auto& [m, c] : f.terms) {
        (void)c;
        for (int i = 0; i < work.size(); ++i)
            if (m[i] != 0 && work.kind(i) == VarKind::Gauge) mg = std::max(mg, i);
    }
    return mg;
}

}  // namespace

TruncatedSeries integrate_molien(const Integrand& ig, int order, int jtype_cap,
                                 const std::optional<std::map<std::string, Rational>>&
                                     framing_values) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    // An insertion's negative gauge exponents must be cancelled by expansion
    // terms too, so they extend the hbar-free cap.
    int insertion_neg = 0;
    if (ig.insertion) {
        for (const auto& [m, c] : ig.insertion->terms()) {
            (void)c;
            int neg = 0;
            for (int i = 0; i < ig.reg->size(); ++i)
                if (ig.reg->kind(i) == VarKind::Gauge && m[i] < 0) neg -= m[i];
            insertion_neg = std::max(insertion_neg, neg);
        }
    }
    const int default_cap = order +
                            static_cast<int>(ig.numerator.size() + ig.weyl.size()) +
                            insertion_neg;
    const int cap0 = jtype_cap < 0 ? default_cap : jtype_cap;

    Mapper mp = make_mapper(ig.reg, framing_values);
    const auto& work = *mp.work;
    const int nwork = work.size();

    std::vector<Factor> factors;
    auto add_binomial = [&](const Exponents& u) {
        Factor f;
        f.terms.emplace_back(Exponents(nwork, 0), Rational(1));
        auto [e, c] = mp.map(u);
        f.terms.emplace_back(std::move(e), -c);
        factors.push_back(std::move(f));
    };
    for (const auto& u : ig.numerator) add_binomial(u);
    for (const auto& u : ig.weyl) add_binomial(u);
    for (const auto& s : ig.denominator) {
        auto [e, c] = mp.map(s);
        if (mono_trivial(e))
            throw std::logic_error("zero gauge/hbar weight in a denominator factor");
        const int h = hbar_degree(e);
        const int cap = h >= 1 ? order / h : cap0;
        Factor f;
        Exponents acc(nwork, 0);
        Rational cc = 1;
        for (int k = 0; k <= cap; ++k) {
            f.terms.emplace_back(acc, cc);
            acc = mono_mul(acc, e);
            cc *= c;
        }
        factors.push_back(std::move(f));
    }
    if (ig.insertion) {
        Factor f;
        for (const auto& [m, c] : ig.insertion->terms()) {
            auto [e, cc] = mp.map(m);
            f.terms.emplace_back(std::move(e), c * cc);
        }
        if (f.terms.empty()) f.terms.emplace_back(Exponents(nwork, 0), Rational(0));
        factors.push_back(std::move(f));
    }

    for (auto& f : factors) f.max_gauge = max_gauge_index(f, work);
    std::stable_sort(factors.begin(), factors.end(),
                     [](const Factor& a, const Factor& b) { return a.max_gauge < b.max_gauge; });

    const int nf = static_cast<int>(factors.size());
    // Suffix bounds for pruning: the largest hbar-free positive/negative
    // exponent step each remaining factor can still contribute per gauge var.
    std::vector<std::vector<int>> suf_pos(nf + 1, std::vector<int>(nwork, 0));
    std::vector<std::vector<int>> suf_neg(nf + 1, std::vector<int>(nwork, 0));
    std::vector<int> last_use(nwork, -1);
    for (int p = nf - 1; p >= 0; --p) {
        suf_pos[p] = suf_pos[p + 1];
        suf_neg[p] = suf_neg[p + 1];
        std::vector<int> fpos(nwork, 0), fneg(nwork, 0);
        for (const auto& [m, c] : factors[p].terms) {
            (void)c;
            const bool hfree = hbar_degree(m) == 0;
            for (int i = 0; i < nwork; ++i) {
                if (work.kind(i) != VarKind::Gauge || m[i] == 0) continue;
                if (last_use[i] < 0) last_use[i] = p;
                if (hfree) {
                    fpos[i] = std::max(fpos[i], static_cast<int>(m[i]));
                    fneg[i] = std::max(fneg[i], static_cast<int>(-m[i]));
                }
            }
        }
        for (int i = 0; i < nwork; ++i) {
            suf_pos[p][i] += fpos[i];
            suf_neg[p][i] += fneg[i];
        }
    }

    std::map<Exponents, Rational> acc;
    acc.emplace(Exponents(nwork, 0), Rational(1));
    for (int p = 0; p < nf; ++p) {
        std::map<Exponents, Rational> next;
        for (const auto& [mt, ct] : acc) {
            const int dt = hbar_degree(mt);
            for (const auto& [mf, cf] : factors[p].terms) {
                const int dh = dt + hbar_degree(mf);
                if (dh > order) continue;
                Exponents m = mono_mul(mt, mf);
                const int budget = order - dh;
                bool keep = true;
                for (int i = 0; i < nwork && keep; ++i) {
                    if (work.kind(i) != VarKind::Gauge || m[i] == 0) continue;
                    if (m[i] > budget + suf_neg[p + 1][i]) keep = false;
                    if (-m[i] > budget + suf_pos[p + 1][i]) keep = false;
                }
                if (!keep) continue;
                auto it = next.find(m);
                if (it == next.end())
                    next.emplace(std::move(m), ct * cf);
                else {
                    it->second += ct * cf;
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        acc = std::move(next);
        // Eagerly drop non-constant terms in variables no later factor touches.
        for (int i = 0; i < nwork; ++i) {
            if (work.kind(i) != VarKind::Gauge || last_use[i] != p) continue;
            for (auto it = acc.begin(); it != acc.end();)
                it = (it->first[i] != 0) ? acc.erase(it) : std::next(it);
        }
    }

    // Project away the (now exponent-zero) gauge variables.
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    std::vector<int> keep_idx;
    for (int i = 0; i < nwork; ++i) {
        if (work.kind(i) == VarKind::Gauge || work.kind(i) == VarKind::Hbar) continue;
        names.push_back(work.name(i));
        kinds.push_back(work.kind(i));
        keep_idx.push_back(i);
    }
    auto out_reg = VarRegistry::custom(names, kinds);
    TruncatedSeries out(out_reg, order);
    const Rational inv_w = Rational(1, ig.weyl_order);
    for (const auto& [m, c] : acc) {
        for (int i = 0; i < nwork; ++i)
            if (work.kind(i) == VarKind::Gauge) assert(m[i] == 0);
        Exponents e(out_reg->size(), 0);
        for (std::size_t j = 0; j < keep_idx.size(); ++j) e[j] = m[keep_idx[j]];
        e[out_reg->size() - 2] = m[nwork - 2];
        e[out_reg->size() - 1] = m[nwork - 1];
        out.add_term(e, c * inv_w);
    }
    return out;
}

TruncatedSeries molien_series(const QuiverData& q, const DimData& d, int order,
                              const MolienOptions& opts) {
    auto t = weight_tables(q, d);
    auto ig = build_integrand(t);
    return integrate_molien(ig, order, opts.jtype_cap, opts.framing_values);
}

TruncatedSeries taut_character(const QuiverData& q, const DimData& d,
                               const MultiPartition& lambda, int order,
                               const MolienOptions& opts) {
    auto t = weight_tables(q, d);
    lambda.validate(d.v);
    auto ins = f_lambda(lambda, t.reg, order);
    auto ig = build_integrand(t, std::move(ins));
    return integrate_molien(ig, order, opts.jtype_cap, opts.framing_values);
}

namespace {

std::string exps_str(const VarRegistry& reg, const Exponents& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < reg.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << " ";
        first = false;
        os << reg.name(i) << "^" << m[i];
    }
    return first ? "1" : os.str();
}

}  // namespace

EulerCrosscheckReport euler_crosscheck(const QuiverData& q, const DimData& d, int dmax) {
    auto scan = homology_scan(q, d, dmax);
    auto t = weight_tables(q, d);
    const auto& reg = *t.reg;

    // Chain-level expansion of prod(1 - h1 h2 r)/prod(1 - s), graded by
    // weighted degree (1 per coordinate unit, 2 per exterior generator).
    // Key: (weighted degree, torus weight).
    std::map<std::pair<int, Exponents>, Int> series;
    series[{0, Exponents(reg.size(), 0)}] = 1;
    auto multiply = [&](const std::vector<std::pair<int, std::pair<Exponents, Int>>>& factor) {
        std::map<std::pair<int, Exponents>, Int> next;
        for (const auto& [key, c] : series) {
            for (const auto& [dw, term] : factor) {
                int nd = key.first + dw;
                if (nd > dmax) continue;
                auto m = mono_mul(key.second, term.first);
                auto& slot = next[{nd, std::move(m)}];
                slot += c * term.second;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        series = std::move(next);
    };
    for (const auto& r : t.gauge) {
        Exponents u = r;
        u[reg.h1()] += 1;
        u[reg.h2()] += 1;
        multiply({{0, {Exponents(reg.size(), 0), 1}}, {2, {u, -1}}});
    }
    for (const auto& s : t.matter) {
        std::vector<std::pair<int, std::pair<Exponents, Int>>> f;
        Exponents acc(reg.size(), 0);
        for (int k = 0; k <= dmax; ++k) {
            f.push_back({k, {acc, 1}});
            acc = mono_mul(acc, s);
        }
        multiply(f);
    }

    // Koszul side: per (weighted degree, multidegree) alternating sum of H_i.
    std::map<std::pair<int, Exponents>, Int> koszul;
    for (const auto& piece : scan.pieces) {
        Int chi = 0;
        for (std::size_t i = 0; i < piece.homology_dims.size(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * Int(piece.homology_dims[i]);
        if (chi != 0) koszul[{piece.weighted_degree, piece.multidegree}] = chi;
    }

    EulerCrosscheckReport report;
    report.compared = std::max(series.size(), koszul.size());
    for (const auto& [key, c] : series) {
        auto it = koszul.find(key);
        Int k = it == koszul.end() ? Int(0) : it->second;
        if (k != c) {
            report.ok = false;
            std::ostringstream os;
            os << "weighted degree " << key.first << ", weight " << exps_str(reg, key.second)
               << ": series " << c << " vs homology " << k;
            report.mismatch = os.str();
            return report;
        }
    }
    for (const auto& [key, c] : koszul) {
        if (series.find(key) == series.end() && c != 0) {
            report.ok = false;
            std::ostringstream os;
            os << "weighted degree " << key.first << ", weight " << exps_str(reg, key.second)
               << ": homology " << c << " missing from series";
            report.mismatch = os.str();
            return report;
        }
    }
    return report;
}

}  // namespace nakamol

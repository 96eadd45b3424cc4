#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nakamol/rational.hpp"

namespace nakamol {

enum class VarKind { Gauge, Framing, Hbar };

// Canonical variable order: x_{a,i} blocks per vertex (declaration order),
// then a_{a,k} blocks per vertex, then h1, h2.
class VarRegistry {
public:
    static std::shared_ptr<const VarRegistry> for_quiver(
        const std::vector<int>& v, const std::vector<int>& w,
        const std::vector<std::string>& vertex_names = {});

    // Free-form registry (used by oracles and tests); h1,h2 are always appended.
    static std::shared_ptr<const VarRegistry> custom(
        const std::vector<std::string>& names, const std::vector<VarKind>& kinds);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    VarKind kind(int i) const { return kinds_[i]; }
    int find(const std::string& name) const;  // -1 if absent

    int num_vertices() const { return static_cast<int>(v_.size()); }
    int vdim(int vertex) const { return v_[vertex]; }
    int wdim(int vertex) const { return w_[vertex]; }
    int x(int vertex, int i) const { return gauge_off_[vertex] + i; }  // i in [0, v_a)
    int a(int vertex, int k) const { return fram_off_[vertex] + k; }   // k in [0, w_a)
    int h1() const { return size() - 2; }
    int h2() const { return size() - 1; }

    std::vector<int> gauge_indices() const;
    std::vector<int> framing_indices() const;

    bool same_as(const VarRegistry& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::vector<VarKind> kinds_;
    std::vector<int> v_, w_;
    std::vector<int> gauge_off_, fram_off_;
};

using Registry = std::shared_ptr<const VarRegistry>;

// Exponent vector over a registry; the trivial monomial is all zeros.
using Exponents = std::vector<std::int32_t>;

inline int hbar_degree(const Exponents& e) {
    const auto n = e.size();
    return static_cast<int>(e[n - 2] + e[n - 1]);
}

Exponents mono_mul(const Exponents& m1, const Exponents& m2);
Exponents mono_inv(const Exponents& m);
bool mono_trivial(const Exponents& m);

// Finitely supported map Exponents -> nonzero Rational, truncated at total
// hbar-degree <= order. Iteration order is lexicographic in the exponents.
class TruncatedSeries {
public:
    TruncatedSeries(Registry reg, int order) : reg_(std::move(reg)), order_(order) {
        if (order_ < 0) throw std::invalid_argument("truncation order must be >= 0");
    }

    const Registry& registry() const { return reg_; }
    int order() const { return order_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * m, dropping the term if it exceeds the truncation order or if a
    // stored hbar-exponent would be negative.
    void add_term(const Exponents& m, const Rational& c);
    Rational coeff(const Exponents& m) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries& operator*=(const Rational& c);

    TruncatedSeries retruncated(int new_order) const;

    static TruncatedSeries one(const Registry& reg, int order);
    static TruncatedSeries monomial(const Registry& reg, int order, const Exponents& m,
                                    const Rational& c = 1);

    bool operator==(const TruncatedSeries& rhs) const;

private:
    void check_compatible(const TruncatedSeries& rhs) const;
    Registry reg_;
    int order_;
    std::map<Exponents, Rational> terms_;
};

// Sum_{k=0}^{cap} s^k truncated at hbar-degree <= order. If hbar_degree(s) >= 1
// the cap is tightened to order / hbar_degree(s); cap < 0 means "unbounded",
// which is only legal for hbar-positive s. Rejects s = 1.
TruncatedSeries geom_expand(const Registry& reg, const Exponents& s, int cap, int order);

// Keeps the terms whose exponents vanish on every variable in `vars` and
// projects onto the registry with those variables removed.
TruncatedSeries constant_term(const TruncatedSeries& s, const std::vector<int>& vars);

// Evaluates every non-hbar variable at the given rational; h1,h2 stay symbolic.
// Variables appearing with negative exponent must receive a nonzero value.
TruncatedSeries eval_rational(const TruncatedSeries& s,
                              const std::map<std::string, Rational>& assignment);

// Fully numeric slices: index d holds the value of the hbar-degree-d part.
std::vector<Rational> eval_rational_slices(const TruncatedSeries& s,
                                           const std::map<std::string, Rational>& assignment,
                                           const Rational& h1, const Rational& h2);

// Relabels variables: to[i] is the new index of variable i (a permutation).
TruncatedSeries permute_variables(const TruncatedSeries& s, const std::vector<int>& to);

}  // namespace nakamol

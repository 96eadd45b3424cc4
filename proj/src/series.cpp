#include "nakamol/series.hpp"

#include <algorithm>

namespace nakamol {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational: " + s);
    return Rational(num, den);
}

std::shared_ptr<const VarRegistry> VarRegistry::for_quiver(
    const std::vector<int>& v, const std::vector<int>& w,
    const std::vector<std::string>& vertex_names) {
    if (v.size() != w.size())
        throw std::invalid_argument("dimension vectors must have equal length");
    auto reg = std::make_shared<VarRegistry>();
    reg->v_ = v;
    reg->w_ = w;
    const int n = static_cast<int>(v.size());
    auto vname = [&](int a) {
        return a < static_cast<int>(vertex_names.size()) ? vertex_names[a]
                                                         : std::to_string(a + 1);
    };
    for (int a = 0; a < n; ++a) {
        reg->gauge_off_.push_back(static_cast<int>(reg->names_.size()));
        for (int i = 0; i < v[a]; ++i) {
            reg->names_.push_back("x[" + vname(a) + "," + std::to_string(i + 1) + "]");
            reg->kinds_.push_back(VarKind::Gauge);
        }
    }
    for (int a = 0; a < n; ++a) {
        reg->fram_off_.push_back(static_cast<int>(reg->names_.size()));
        for (int k = 0; k < w[a]; ++k) {
            reg->names_.push_back("a[" + vname(a) + "," + std::to_string(k + 1) + "]");
            reg->kinds_.push_back(VarKind::Framing);
        }
    }
    reg->names_.push_back("h1");
    reg->names_.push_back("h2");
    reg->kinds_.push_back(VarKind::Hbar);
    reg->kinds_.push_back(VarKind::Hbar);
    return reg;
}

std::shared_ptr<const VarRegistry> VarRegistry::custom(
    const std::vector<std::string>& names, const std::vector<VarKind>& kinds) {
    if (names.size() != kinds.size())
        throw std::invalid_argument("names/kinds length mismatch");
    auto reg = std::make_shared<VarRegistry>();
    reg->names_ = names;
    reg->kinds_ = kinds;
    reg->names_.push_back("h1");
    reg->names_.push_back("h2");
    reg->kinds_.push_back(VarKind::Hbar);
    reg->kinds_.push_back(VarKind::Hbar);
    return reg;
}

int VarRegistry::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

std::vector<int> VarRegistry::gauge_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (kinds_[i] == VarKind::Gauge) out.push_back(i);
    return out;
}

std::vector<int> VarRegistry::framing_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (kinds_[i] == VarKind::Framing) out.push_back(i);
    return out;
}

Exponents mono_mul(const Exponents& m1, const Exponents& m2) {
    if (m1.size() != m2.size()) throw std::invalid_argument("registry mismatch");
    Exponents out(m1.size());
    for (std::size_t i = 0; i < m1.size(); ++i) out[i] = m1[i] + m2[i];
    return out;
}

Exponents mono_inv(const Exponents& m) {
    Exponents out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = -m[i];
    return out;
}

bool mono_trivial(const Exponents& m) {
    return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

void TruncatedSeries::add_term(const Exponents& m, const Rational& c) {
    if (static_cast<int>(m.size()) != reg_->size())
        throw std::invalid_argument("monomial does not match registry");
    if (c == 0) return;
    const int d = hbar_degree(m);
    if (d < 0 || d > order_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TruncatedSeries::coeff(const Exponents& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& rhs) const {
    if (!reg_->same_as(*rhs.reg_)) throw std::invalid_argument("registry mismatch");
    if (order_ != rhs.order_) throw std::invalid_argument("truncation order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    check_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    check_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    check_compatible(rhs);
    TruncatedSeries out(reg_, order_);
    for (const auto& [m1, c1] : terms_) {
        const int d1 = hbar_degree(m1);
        for (const auto& [m2, c2] : rhs.terms_) {
            if (d1 + hbar_degree(m2) > order_) continue;
            out.add_term(mono_mul(m1, m2), c1 * c2);
        }
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
}

TruncatedSeries TruncatedSeries::retruncated(int new_order) const {
    TruncatedSeries out(reg_, new_order);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

TruncatedSeries TruncatedSeries::one(const Registry& reg, int order) {
    TruncatedSeries out(reg, order);
    out.add_term(Exponents(reg->size(), 0), 1);
    return out;
}

TruncatedSeries TruncatedSeries::monomial(const Registry& reg, int order,
                                          const Exponents& m, const Rational& c) {
    TruncatedSeries out(reg, order);
    out.add_term(m, c);
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
    return reg_->same_as(*rhs.reg_) && order_ == rhs.order_ && terms_ == rhs.terms_;
}

TruncatedSeries geom_expand(const Registry& reg, const Exponents& s, int cap, int order) {
    const int h = hbar_degree(s);
    if (h < 0) throw std::invalid_argument("geom_expand: negative hbar-degree generator");
    if (h >= 1) {
        const int tight = order / h;
        cap = (cap < 0) ? tight : std::min(cap, tight);
    } else if (cap < 0) {
        throw std::invalid_argument(
            "geom_expand: unbounded expansion of an hbar-degree-0 weight (zero weight in "
            "a denominator?)");
    }
    if (mono_trivial(s) && cap < 0)
        throw std::invalid_argument("geom_expand: trivial monomial with unbounded cap");
    TruncatedSeries out(reg, order);
    Exponents acc(reg->size(), 0);
    for (int k = 0; k <= cap; ++k) {
        out.add_term(acc, 1);
        acc = mono_mul(acc, s);
    }
    return out;
}

TruncatedSeries constant_term(const TruncatedSeries& s, const std::vector<int>& vars) {
    const auto& reg = *s.registry();
    std::vector<bool> drop(reg.size(), false);
    for (int v : vars) {
        if (v < 0 || v >= reg.size()) throw std::invalid_argument("bad variable index");
        if (reg.kind(v) != VarKind::Gauge)
            throw std::invalid_argument("constant_term: only gauge variables can be extracted");
        drop[v] = true;
    }
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    std::vector<int> keep;
    for (int i = 0; i < reg.size(); ++i) {
        if (drop[i] || reg.kind(i) == VarKind::Hbar) continue;
        names.push_back(reg.name(i));
        kinds.push_back(reg.kind(i));
        keep.push_back(i);
    }
    auto sub = VarRegistry::custom(names, kinds);
    TruncatedSeries out(sub, s.order());
    for (const auto& [m, c] : s.terms()) {
        bool ok = true;
        for (int i = 0; i < reg.size() && ok; ++i)
            if (drop[i] && m[i] != 0) ok = false;
        if (!ok) continue;
        Exponents proj(sub->size(), 0);
        for (std::size_t j = 0; j < keep.size(); ++j) proj[j] = m[keep[j]];
        proj[sub->size() - 2] = m[reg.size() - 2];
        proj[sub->size() - 1] = m[reg.size() - 1];
        out.add_term(proj, c);
    }
    return out;
}

TruncatedSeries eval_rational(const TruncatedSeries& s,
                              const std::map<std::string, Rational>& assignment) {
    const auto& reg = *s.registry();
    std::vector<Rational> value(reg.size(), Rational(0));
    std::vector<bool> has(reg.size(), false);
    for (const auto& [name, val] : assignment) {
        int i = reg.find(name);
        if (i < 0) throw std::invalid_argument("assignment for unknown variable: " + name);
        value[i] = val;
        has[i] = true;
    }
    auto hreg = VarRegistry::custom({}, {});
    TruncatedSeries out(hreg, s.order());
    for (const auto& [m, c] : s.terms()) {
        Rational acc = c;
        for (int i = 0; i < reg.size(); ++i) {
            if (reg.kind(i) == VarKind::Hbar || m[i] == 0) continue;
            if (!has[i])
                throw std::invalid_argument("missing assignment for variable " + reg.name(i));
            if (value[i] == 0 && m[i] < 0)
                throw std::invalid_argument("zero assigned to variable with negative exponent: " +
                                            reg.name(i));
            acc *= rat_pow(value[i], m[i]);
        }
        Exponents hm(2, 0);
        hm[0] = m[reg.size() - 2];
        hm[1] = m[reg.size() - 1];
        out.add_term(hm, acc);
    }
    return out;
}

std::vector<Rational> eval_rational_slices(const TruncatedSeries& s,
                                           const std::map<std::string, Rational>& assignment,
                                           const Rational& h1, const Rational& h2) {
    TruncatedSeries hs = eval_rational(s, assignment);
    std::vector<Rational> out(s.order() + 1, Rational(0));
    for (const auto& [m, c] : hs.terms()) {
        Rational v = c;
        v *= rat_pow(h1, m[0]);
        v *= rat_pow(h2, m[1]);
        out[m[0] + m[1]] += v;
    }
    return out;
}

TruncatedSeries permute_variables(const TruncatedSeries& s, const std::vector<int>& to) {
    const auto& reg = *s.registry();
    if (static_cast<int>(to.size()) != reg.size())
        throw std::invalid_argument("permutation size mismatch");
    TruncatedSeries out(s.registry(), s.order());
    for (const auto& [m, c] : s.terms()) {
        Exponents p(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) p[to[i]] = m[i];
        out.add_term(p, c);
    }
    return out;
}

}  // namespace nakamol

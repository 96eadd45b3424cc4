#include "nakamol/schur.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nakamol {

void GLPartition::validate() const {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
}

void MultiPartition::validate(const std::vector<int>& v) const {
    if (components.size() != v.size())
        throw std::invalid_argument("multipartition must have one component per vertex");
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (components[a].length() != v[a])
            throw std::invalid_argument("partition length mismatch at vertex " +
                                        std::to_string(a + 1));
        components[a].validate();
    }
}

bool MultiPartition::all_zero() const {
    for (const auto& c : components)
        for (int p : c.parts)
            if (p != 0) return false;
    return true;
}

MultiPartition MultiPartition::parse(const std::string& text) {
    MultiPartition mp;
    std::stringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, ';')) {
        GLPartition p;
        std::stringstream ss(block);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
            if (tok.empty()) continue;
            std::size_t pos = 0;
            int val = std::stoi(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument("bad partition entry: " + tok);
            p.parts.push_back(val);
        }
        p.validate();
        mp.components.push_back(std::move(p));
    }
    return mp;
}

std::string MultiPartition::str() const {
    std::string out;
    for (std::size_t a = 0; a < components.size(); ++a) {
        if (a) out += ";";
        for (int i = 0; i < components[a].length(); ++i) {
            if (i) out += ",";
            out += std::to_string(components[a].parts[i]);
        }
    }
    return out;
}

namespace {

using Poly = std::map<Exponents, Rational>;

void poly_add(Poly& p, const Exponents& e, const Rational& c) {
    auto it = p.find(e);
    if (it == p.end()) {
        if (c != 0) p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

// Exact division by (x_vi - x_vj); throws if the division leaves a remainder.
void divide_binomial(Poly& p, int vi, int vj) {
    Poly quotient;
    while (!p.empty()) {
        // leading term: maximal exponent of x_vi, ties by lex order
        auto lead = p.begin();
        for (auto it = p.begin(); it != p.end(); ++it)
            if (it->first[vi] > lead->first[vi]) lead = it;
        if (lead->first[vi] <= 0)
            throw std::logic_error("alternant not divisible by Vandermonde factor");
        Exponents q = lead->first;
        q[vi] -= 1;
        Rational c = lead->second;
        poly_add(quotient, q, c);
        p.erase(lead);
        Exponents r = q;
        r[vj] += 1;
        poly_add(p, r, c);
    }
    p = std::move(quotient);
}

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

TruncatedSeries schur_laurent(const GLPartition& lambda, const Registry& reg, int vertex,
                              int order) {
    lambda.validate();
    const int v = reg->vdim(vertex);
    if (lambda.length() != v)
        throw std::invalid_argument("partition length must equal the vertex gauge dimension");
    TruncatedSeries out = TruncatedSeries::one(reg, order);
    if (v == 0) return out;

    const int shift = lambda.parts[v - 1];  // det-twist for negative parts
    std::vector<int> mu(v);
    for (int j = 0; j < v; ++j) mu[j] = lambda.parts[j] - shift + (v - 1 - j);

    // alternant det(x_i^{mu_j}) expanded over permutations
    Poly alt;
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Exponents e(reg->size(), 0);
        for (int i = 0; i < v; ++i) e[reg->x(vertex, i)] = mu[perm[i]];
        poly_add(alt, e, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            divide_binomial(alt, reg->x(vertex, i), reg->x(vertex, j));

    TruncatedSeries result(reg, order);
    for (auto& [e, c] : alt) {
        Exponents shifted = e;
        for (int i = 0; i < v; ++i) shifted[reg->x(vertex, i)] += shift;
        result.add_term(shifted, c);
    }
    return result;
}

TruncatedSeries f_lambda(const MultiPartition& lambda, const Registry& reg, int order) {
    std::vector<int> v(reg->num_vertices());
    for (int a = 0; a < reg->num_vertices(); ++a) v[a] = reg->vdim(a);
    lambda.validate(v);
    TruncatedSeries out = TruncatedSeries::one(reg, order);
    for (int a = 0; a < reg->num_vertices(); ++a)
        out = out * schur_laurent(lambda.components[a], reg, a, order);
    return out;
}

MultiPartition shift_large(const MultiPartition& lambda, const std::vector<int>& theta,
                           int m) {
    if (m < 0) throw std::invalid_argument("shift multiplier must be >= 0");
    if (theta.size() != lambda.components.size())
        throw std::invalid_argument("theta length mismatch");
    MultiPartition out = lambda;
    for (std::size_t a = 0; a < out.components.size(); ++a)
        for (int& p : out.components[a].parts) p += m * theta[a];
    return out;
}

MultiPartition dual_partition(const MultiPartition& lambda) {
    MultiPartition out = lambda;
    for (auto& comp : out.components) {
        std::reverse(comp.parts.begin(), comp.parts.end());
        for (int& p : comp.parts) p = -p;
    }
    return out;
}

Rational schur_at(const GLPartition& lambda, const std::vector<Rational>& x) {
    lambda.validate();
    const int v = static_cast<int>(x.size());
    if (lambda.length() != v)
        throw std::invalid_argument("partition length must equal the number of points");
    if (v == 0) return 1;
    const int shift = lambda.parts[v - 1];

    // bialternant ratio: det(x_i^{mu_j}) / det(x_i^{v-1-j}), times (prod x_i)^shift
    auto det = [&](const std::vector<int>& expo) {
        std::vector<std::vector<Rational>> m(v, std::vector<Rational>(v));
        for (int i = 0; i < v; ++i)
            for (int j = 0; j < v; ++j)
                m[i][j] = rat_pow(x[i], expo[j]);
        Rational d = 1;
        for (int col = 0; col < v; ++col) {
            int piv = -1;
            for (int r = col; r < v; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Rational(0);
            if (piv != col) {
                std::swap(m[piv], m[col]);
                d = -d;
            }
            d *= m[col][col];
            for (int r = col + 1; r < v; ++r) {
                Rational f = m[r][col] / m[col][col];
                for (int cc = col; cc < v; ++cc) m[r][cc] -= f * m[col][cc];
            }
        }
        return d;
    };

    std::vector<int> mu(v), delta(v);
    for (int j = 0; j < v; ++j) {
        mu[j] = lambda.parts[j] - shift + (v - 1 - j);
        delta[j] = v - 1 - j;
    }
    Rational denom = det(delta);
    if (denom == 0) throw std::invalid_argument("coincident evaluation points");
    Rational val = det(mu) / denom;
    for (int i = 0; i < v; ++i) {
        if (x[i] == 0 && shift < 0)
            throw std::invalid_argument("zero point with negative determinant twist");
        val *= rat_pow(x[i], shift);
    }
    return val;
}

}  // namespace nakamol

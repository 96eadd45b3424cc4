#include <doctest.h>

#include "nakamol/schur.hpp"

using namespace nakamol;

namespace {
Registry reg2() { return VarRegistry::for_quiver({2}, {0}); }

TruncatedSeries mono2(const Registry& r, int e1, int e2) {
    Exponents e(r->size(), 0);
    e[r->x(0, 0)] = e1;
    e[r->x(0, 1)] = e2;
    return TruncatedSeries::monomial(r, 0, e);
}
}  // namespace

TEST_CASE("multipartition text round trip") {
    auto mp = MultiPartition::parse("1,0;-2,-2");
    REQUIRE(mp.components.size() == 2);
    CHECK(mp.components[0].parts == std::vector<int>{1, 0});
    CHECK(mp.components[1].parts == std::vector<int>{-2, -2});
    CHECK(mp.str() == "1,0;-2,-2");
    CHECK_THROWS(MultiPartition::parse("0,1"));  // not weakly decreasing
    CHECK_THROWS(mp.validate({2, 3}));           // length mismatch at vertex 2
}

TEST_CASE("schur polynomials in two variables") {
    auto r = reg2();
    auto add = [](TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    };
    SUBCASE("single box") {
        auto s = schur_laurent({{1, 0}}, r, 0, 0);
        CHECK(s == add(mono2(r, 1, 0), mono2(r, 0, 1)));
    }
    SUBCASE("determinant") {
        auto s = schur_laurent({{1, 1}}, r, 0, 0);
        CHECK(s == mono2(r, 1, 1));
    }
    SUBCASE("complete homogeneous") {
        auto s = schur_laurent({{2, 0}}, r, 0, 0);
        CHECK(s == add(add(mono2(r, 2, 0), mono2(r, 1, 1)), mono2(r, 0, 2)));
    }
    SUBCASE("negative parts via determinant twist") {
        auto s = schur_laurent({{-1, -1}}, r, 0, 0);
        CHECK(s == mono2(r, -1, -1));
        auto t = schur_laurent({{0, -1}}, r, 0, 0);
        CHECK(t == add(mono2(r, 0, -1), mono2(r, -1, 0)));
    }
}

TEST_CASE("determinant-shift identity") {
    auto r = reg2();
    // s_lambda = s_{lambda - (c,c)} * (x1 x2)^c, checked for several shifts
    for (int c : {-2, -1, 1, 3}) {
        GLPartition lam{{2 + c, c}};
        auto lhs = schur_laurent(lam, r, 0, 0);
        auto rhs = schur_laurent({{2, 0}}, r, 0, 0) * mono2(r, c, c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dual partition inverts variables") {
    auto r = reg2();
    GLPartition lam{{2, -1}};
    auto dual = dual_partition(MultiPartition{{lam}});
    CHECK(dual.components[0].parts == std::vector<int>{1, -2});
    auto s = schur_laurent(lam, r, 0, 0);
    auto sd = schur_laurent(dual.components[0], r, 0, 0);
    // term-by-term: exponents of sd are the negated exponents of s
    for (const auto& [m, c] : s.terms()) {
        CHECK(sd.coeff(mono_inv(m)) == c);
    }
}

TEST_CASE("largeness shift") {
    auto mp = MultiPartition::parse("1,0;2");
    auto shifted = shift_large(mp, {3, -1}, 2);
    CHECK(shifted.components[0].parts == std::vector<int>{7, 6});
    CHECK(shifted.components[1].parts == std::vector<int>{0});
    CHECK_THROWS(shift_large(mp, {3, -1}, -1));
    CHECK_THROWS(shift_large(mp, {3}, 1));
}

TEST_CASE("rational evaluation agrees with the expansion") {
    auto r = reg2();
    GLPartition lam{{2, -1}};
    std::vector<Rational> pts{Rational(2), Rational(3, 2)};
    auto s = schur_laurent(lam, r, 0, 0);
    Rational direct = 0;
    for (const auto& [m, c] : s.terms())
        direct += c * rat_pow(pts[0], m[r->x(0, 0)]) * rat_pow(pts[1], m[r->x(0, 1)]);
    CHECK(schur_at(lam, pts) == direct);
    CHECK_THROWS(schur_at(lam, {Rational(2), Rational(2)}));  // coincident points
}

TEST_CASE("f_lambda multiplies vertex factors") {
    auto r = VarRegistry::for_quiver({1, 1}, {0, 0});
    auto f = f_lambda(MultiPartition::parse("2;-1"), r, 0);
    Exponents e(r->size(), 0);
    e[r->x(0, 0)] = 2;
    e[r->x(1, 0)] = -1;
    CHECK(f == TruncatedSeries::monomial(r, 0, e));
}

#include <doctest.h>

#include <random>

#include "nss/json_io.hpp"
#include "nss/laurent.hpp"

using namespace nss;

namespace {

MultiPoly a(int k) { return MultiPoly::variable(k); }

SymbolicLaurent mono(const MultiPoly& c, int e) { return SymbolicLaurent::monomial(c, e); }

// Sparse random Laurent polynomial with small integer coefficients.
RationalLaurent random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 4), exps(-6, 6), coeffs(-3, 3);
    RationalLaurent p;
    for (int k = terms(rng); k > 0; --k) p += RationalLaurent::monomial(Rational(coeffs(rng)), exps(rng));
    return p;
}

SymbolicLaurent random_symbolic(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 3), exps(-4, 4), var(1, 3), coeffs(-2, 2);
    SymbolicLaurent p;
    for (int k = terms(rng); k > 0; --k)
        p += mono(a(var(rng)) * MultiPoly(static_cast<long>(coeffs(rng))) + MultiPoly(static_cast<long>(coeffs(rng))),
                  exps(rng));
    return p;
}

}  // namespace

TEST_CASE("valuation ordering and arithmetic") {
    CHECK(Valuation(3) < Valuation::infinity());
    CHECK(Valuation(-2) < Valuation(1));
    CHECK(Valuation(2) + Valuation(-5) == Valuation(-3));
    CHECK(Valuation(2) + Valuation::infinity() == Valuation::infinity());
    CHECK(Valuation::infinity().to_string() == "inf");
    CHECK(Valuation(-4).to_string() == "-4");
}

TEST_CASE("val of simple polynomials") {
    CHECK(RationalLaurent{}.val() == Valuation::infinity());
    CHECK(RationalLaurent::monomial(Rational(0), 3).is_zero());
    CHECK(RationalLaurent::monomial(Rational(5), -3).val() == Valuation(-3));
    // a1 a2 t^-2 + t^5
    const auto p = mono(a(1) * a(2), -2) + mono(MultiPoly(1L), 5);
    CHECK(p.val() == Valuation(-2));
    CHECK(lp_val(p) == Valuation(-2));
}

TEST_CASE("square of a two-term symbolic polynomial") {
    const auto p = mono(a(1), -1) + mono(a(2), -2);
    const auto sq = lp_mul(p, p);
    REQUIRE(sq.terms().size() == 3);
    CHECK(sq.terms().at(-2) == a(1) * a(1));
    CHECK(sq.terms().at(-3) == MultiPoly(2L) * a(1) * a(2));
    CHECK(sq.terms().at(-4) == a(2) * a(2));
    CHECK(sq.val() == Valuation(-4));
}

TEST_CASE("cancellation removes terms") {
    const auto p = mono(a(1), -1) + mono(a(2), 3);
    CHECK((p - p).is_zero());
    CHECK((p - p).val() == Valuation::infinity());
    CHECK(lp_add(p, lp_scale(p, MultiPoly(-1L))).is_zero());
    const auto q = mono(a(1) - a(1), 2);
    CHECK(q.is_zero());
}

TEST_CASE("val is multiplicative and subadditive (rational coefficients)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto p = random_laurent(rng), q = random_laurent(rng);
        CHECK((p * q).val() == p.val() + q.val());
        CHECK((p + q).val() >= std::min(p.val(), q.val()));
        if (p.val() != q.val()) CHECK((p + q).val() == std::min(p.val(), q.val()));
    }
}

TEST_CASE("val is multiplicative and subadditive (symbolic coefficients)") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = random_symbolic(rng), q = random_symbolic(rng);
        CHECK((p * q).val() == p.val() + q.val());
        CHECK((p + q).val() >= std::min(p.val(), q.val()));
        if (p.val() != q.val()) CHECK((p + q).val() == std::min(p.val(), q.val()));
    }
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_symbolic(rng), q = random_symbolic(rng), r = random_symbolic(rng);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("MultiPoly basics") {
    const auto x = a(1), y = a(3);
    CHECK(x.total_degree() == 1);
    CHECK((x * x * y).total_degree() == 3);
    CHECK(MultiPoly().is_zero());
    CHECK(MultiPoly(Rational(0)).is_zero());
    CHECK((x - x).is_zero());
    CHECK((x * y + MultiPoly(2L)).evaluate({Rational(3), Rational(100), Rational(1, 2)}) == Rational(7, 2));
}

TEST_CASE("Laurent JSON rendering") {
    const auto p = RationalLaurent::monomial(Rational(-1, 2), -3) + RationalLaurent::monomial(Rational(4), 1);
    const auto j = laurent_to_json(p);
    CHECK(j["-3"] == "-1/2");
    CHECK(j["1"] == "4");
    CHECK(laurent_to_json(RationalLaurent{}).empty());
}

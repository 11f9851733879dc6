#include "oracles.hpp"

#include "umbra/families.hpp"

#include <doctest.h>

using namespace umbra;
using oracle::error_code_of;

namespace {

Poly P(std::initializer_list<ExactScalar> c) { return Poly(std::vector<ExactScalar>(c)); }

}  // namespace

TEST_CASE("Sheffer pairs of the families") {
    const ShefferPair h = sheffer_pair_of(FamilySpec::hermite(), 6);
    CHECK(h.g() == exp_series(Series::monomial(2, 6, ratio(1, 4))));
    CHECK(h.f() == Series::monomial(1, 6, ratio(1, 2)));
    CHECK(h.fbar() == Series::monomial(1, 6, 2));

    const ShefferPair b0 = sheffer_pair_of(FamilySpec::bernoulli(0), 5);
    CHECK(b0.g() == Series::constant(1, 5));
    CHECK(b0.f() == Series::identity(5));

    const ShefferPair fe = sheffer_pair_of(FamilySpec::frobenius_euler(1, -1), 6);
    const ShefferPair e1 = sheffer_pair_of(FamilySpec::euler(1), 6);
    CHECK(fe.g() == e1.g());
    CHECK(fe.f() == e1.f());

    CHECK(error_code_of([] { sheffer_pair_of(FamilySpec::frobenius_euler(2, 1), 4); }) == Errc::LambdaIsOne);
    CHECK(sheffer_pair_of(FamilySpec::euler(3), 0).trunc_order() == 1);
}

TEST_CASE("(e^t - 1)/t by index shift") {
    const Series s = exp_minus_one_over_t(5);
    CHECK(s.trunc_order() == 5);
    for (std::size_t k = 0; k <= 5; ++k) CHECK(s[k] == ExactScalar(1) / ExactScalar(factorial(k + 1)));
}

TEST_CASE("family_poly") {
    CHECK(family_poly(FamilySpec::hermite(), 0) == P({1}));
    CHECK(family_poly(FamilySpec::bernoulli(1), 2) == P({ratio(1, 6), -1, 1}));
    CHECK(family_poly(FamilySpec::euler(1), 1) == P({ratio(-1, 2), 1}));
    const auto h = family_polys(FamilySpec::hermite(), 4);
    CHECK(h[1] == P({0, 2}));
    CHECK(h[2] == P({-2, 0, 4}));
    CHECK(h[3] == P({0, -12, 0, 8}));
    CHECK(h[4] == P({12, 0, -48, 0, 16}));
}

TEST_CASE("family_number") {
    const auto hn = family_numbers(FamilySpec::hermite(), 4);
    CHECK(hn == std::vector<ExactScalar>{1, 0, -2, 0, 12});
    CHECK(family_number(FamilySpec::bernoulli(1), 0) == 1);
    CHECK(family_number(FamilySpec::bernoulli(1), 1) == ratio(-1, 2));
    CHECK(family_number(FamilySpec::bernoulli(1), 2) == ratio(1, 6));
    for (unsigned r = 0; r <= 5; ++r) CHECK(family_number(FamilySpec::euler(r), 0) == 1);
}

TEST_CASE("generating-function oracles match the Sheffer route") {
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(family_poly(FamilySpec::hermite(), n) == oracle::hermite_by_generating_function(n));
        CHECK(hermite_by_operator(n) == oracle::hermite_by_generating_function(n));
    }
    const std::size_t n = 10;
    for (unsigned r = 0; r <= 4; ++r) {
        // Kernels of the Appell families written straight from their
        // generating functions.
        const Series bern = pow_int(reciprocal(exp_minus_one_over_t(n)), r);
        const Series eul = pow_int(reciprocal(scale(Series::exp_linear(1, n) + Series::constant(1, n), ratio(1, 2))), r);
        const ExactScalar lam = ratio(2, 3);
        const Series fe = pow_int(scale(reciprocal(Series::exp_linear(1, n) - Series::constant(lam, n)), 1 - lam), r);
        const auto bp = family_polys(FamilySpec::bernoulli(r), n);
        const auto ep = family_polys(FamilySpec::euler(r), n);
        const auto fp = family_polys(FamilySpec::frobenius_euler(r, lam), n);
        for (std::size_t m = 0; m <= n; ++m) {
            CHECK(bp[m] == oracle::appell_by_kernel(bern, m));
            CHECK(ep[m] == oracle::appell_by_kernel(eul, m));
            CHECK(fp[m] == oracle::appell_by_kernel(fe, m));
        }
    }
}

TEST_CASE("Appell derivative law") {
    for (const auto& spec : {FamilySpec::bernoulli(2), FamilySpec::euler(3), FamilySpec::frobenius_euler(2, ratio(1, 3)),
                             FamilySpec::bernoulli(0)}) {
        CAPTURE(spec.label());
        const auto polys = family_polys(spec, 12);
        for (std::size_t n = 1; n <= 12; ++n) {
            CHECK(derivative(polys[n], 1) == scale(polys[n - 1], static_cast<unsigned long>(n)));
        }
    }
}

TEST_CASE("Frobenius-Euler at lambda = -1 is Euler") {
    for (unsigned r = 0; r <= 4; ++r) {
        CHECK(family_polys(FamilySpec::frobenius_euler(r, -1), 10) == family_polys(FamilySpec::euler(r), 10));
    }
}

TEST_CASE("order-r kernel is the r-th power of the order-1 kernel") {
    const ExactScalar lam = ratio(-3, 2);
    for (unsigned r = 0; r <= 4; ++r) {
        for (const auto& [one, many] :
             {std::pair{FamilySpec::bernoulli(1), FamilySpec::bernoulli(r)}, std::pair{FamilySpec::euler(1), FamilySpec::euler(r)},
              std::pair{FamilySpec::frobenius_euler(1, lam), FamilySpec::frobenius_euler(r, lam)}}) {
            const Series k1 = reciprocal(sheffer_pair_of(one, 12).g());
            const Series kr = reciprocal(sheffer_pair_of(many, 12).g());
            CHECK(kr == pow_int(k1, r));
        }
    }
}

TEST_CASE("family labels parse back") {
    for (const auto& spec : {FamilySpec::hermite(), FamilySpec::bernoulli(3), FamilySpec::euler(0),
                             FamilySpec::frobenius_euler(2, ratio(-1, 2))}) {
        CHECK(parse_family(spec.label()) == spec);
    }
    CHECK(parse_family("euler") == FamilySpec::euler(1));
    CHECK(error_code_of([] { parse_family("laguerre"); }) == Errc::InvalidArgument);
    CHECK(error_code_of([] { parse_family("euler:x"); }) == Errc::InvalidArgument);
    CHECK(error_code_of([] { parse_family("frobenius-euler:2:1"); }) == Errc::LambdaIsOne);
    CHECK(error_code_of([] { parse_family("frobenius-euler:2"); }) == Errc::InvalidArgument);
}

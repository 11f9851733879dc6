#include "oracles.hpp"

#include "umbra/identities.hpp"

#include <doctest.h>

#include <set>

using namespace umbra;
using oracle::error_code_of;

namespace {

ConnectionMatrix oracle_table(TheoremId id, std::size_t n_max, unsigned r, const ExactScalar& lam = 0) {
    const ShefferPair lhs = sheffer_pair_of(theorem_lhs(id, r, lam), n_max);
    const ShefferPair basis = sheffer_pair_of(theorem_basis(id, r, lam), n_max);
    return connection_oracle(lhs, basis, n_max);
}

void check_against_oracle(TheoremId id, std::size_t n_max, unsigned r, std::optional<ExactScalar> lam = {}) {
    const TheoremFormulas formulas(n_max, r, lam);
    const auto table = oracle_table(id, n_max, r, lam.value_or(0));
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (id == TheoremId::T6 && n >= r) continue;
        if (id == TheoremId::T7 && n < r) continue;
        for (std::size_t k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(formulas.coeff(id, n, k) == table.at(n, k));
        }
    }
}

}  // namespace

TEST_CASE("t1 examples") {
    for (unsigned r = 0; r <= 4; ++r) CHECK(t1_coeff(0, 0, r) == 1);
    CHECK(t1_coeff(1, 1, 1) == ratio(1, 2));
    CHECK(t1_coeff(2, 0, 1) == oracle_table(TheoremId::T1, 2, 1).at(2, 0));
    check_against_oracle(TheoremId::T1, 8, 3);
    CHECK(t1_coeff(2, 3, 1) == 0);
}

TEST_CASE("t2 examples") {
    CHECK(t2_coeff(0, 0, 2) == 1);
    CHECK(t2_coeff(1, 0, 1) == ratio(-1, 2));
    const auto table = oracle_table(TheoremId::T2, 3, 2);
    for (std::size_t k = 0; k <= 3; ++k) CHECK(t2_coeff(3, k, 2) == table.at(3, k));
}

TEST_CASE("t3 examples") {
    CHECK(t3_coeff(0, 0, 3, ratio(1, 2)) == 1);
    for (unsigned r = 0; r <= 3; ++r) {
        const TheoremFormulas at_minus_one(8, r, ExactScalar(-1));
        const TheoremFormulas plain(8, r);
        for (std::size_t n = 0; n <= 8; ++n) {
            for (std::size_t k = 0; k <= n; ++k) CHECK(at_minus_one.t3(n, k) == plain.t1(n, k));
        }
    }
    CHECK(t3_coeff(2, 1, 1, 2) == oracle_table(TheoremId::T3, 2, 1, 2).at(2, 1));
    CHECK(error_code_of([] { t3_coeff(2, 1, 1, 1); }) == Errc::LambdaIsOne);
    CHECK(error_code_of([] { TheoremFormulas(3, 1).t3(1, 0); }) == Errc::InvalidArgument);
}

TEST_CASE("t4 and t5 examples") {
    for (unsigned r = 0; r <= 3; ++r) CHECK(t4_coeff(0, 0, r) == 1);
    CHECK(t4_coeff(1, 0, 1) == 1);
    CHECK(t4_coeff(1, 1, 1) == 2);
    CHECK(t5_coeff(2, 0, 1) == 0);
    for (std::size_t n = 0; n <= 6; ++n) {
        for (unsigned r = 0; r <= 3; ++r) CHECK(t5_coeff(n, n, r) == power(2, n));
    }
    for (unsigned r = 0; r <= 4; ++r) {
        const TheoremFormulas f(8, r);
        for (std::size_t n = 0; n <= 8; ++n) {
            for (std::size_t k = 0; k <= n; ++k) CHECK(f.t4(n, k) == f.t5(n, k));
        }
        check_against_oracle(TheoremId::T5, 8, r);
    }
}

TEST_CASE("t6 examples") {
    CHECK(t6_coeff(0, 0, 1) == 1);
    check_against_oracle(TheoremId::T6, 1, 2);
    check_against_oracle(TheoremId::T6, 2, 5);
    CHECK(error_code_of([] { t6_coeff(3, 1, 3); }) == Errc::RegimeViolation);
}

TEST_CASE("t7 examples") {
    const auto h = family_polys(FamilySpec::hermite(), 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t k = 0; k <= n; ++k) CHECK(t7_coeff(n, k, 0) == h[n].coeff(k));
    }
    check_against_oracle(TheoremId::T7, 2, 1);
    check_against_oracle(TheoremId::T7, 2, 2);
    CHECK(error_code_of([] { t7_coeff(1, 0, 2); }) == Errc::RegimeViolation);
}

TEST_CASE("t8 and remark examples") {
    for (unsigned r = 0; r <= 3; ++r) {
        const TheoremFormulas at_minus_one(8, r, ExactScalar(-1));
        const TheoremFormulas plain(8, r);
        for (std::size_t n = 0; n <= 8; ++n) {
            CHECK(at_minus_one.t8(n, n) == power(2, n));
            for (std::size_t k = 0; k <= n; ++k) {
                CHECK(at_minus_one.t8(n, k) == plain.t5(n, k));
                CHECK(at_minus_one.remark(n, k) == plain.t4(n, k));
            }
        }
        for (const ExactScalar& lam : {ratio(-1, 1), ratio(2, 1), ratio(1, 2)}) {
            const TheoremFormulas f(8, r, lam);
            for (std::size_t n = 0; n <= 8; ++n) {
                for (std::size_t k = 0; k <= n; ++k) CHECK(f.t8(n, k) == f.remark(n, k));
            }
        }
    }
    CHECK(remark_coeff(0, 0, 2, 3) == 1);
    const auto table = oracle_table(TheoremId::T8, 3, 2, ratio(1, 2));
    for (std::size_t k = 0; k <= 3; ++k) CHECK(t8_coeff(3, k, 2, ratio(1, 2)) == table.at(3, k));
    CHECK(error_code_of([] { t8_coeff(2, 1, 1, 1); }) == Errc::LambdaIsOne);
    CHECK(error_code_of([] { remark_coeff(2, 1, 1, 1); }) == Errc::LambdaIsOne);
}

TEST_CASE("the shared Stirling sum holds in both regimes where it is used") {
    // r > n (T6) and k < r <= n (first branch of T7).
    for (unsigned r = 1; r <= 4; ++r) {
        for (std::size_t n_max : {std::size_t{r} - 1, std::size_t{r} + 4}) {
            const TheoremFormulas f(n_max, r);
            const auto table = oracle_table(TheoremId::T6, n_max, r);
            for (std::size_t n = 0; n <= n_max; ++n) {
                for (std::size_t k = 0; k <= std::min<std::size_t>(n, r - 1); ++k) {
                    CHECK(f.stirling_branch(n, k) == table.at(n, k));
                }
            }
        }
    }
}

TEST_CASE("verify_theorem") {
    const auto t1 = verify_theorem({TheoremId::T1, 12, 3, std::nullopt});
    CHECK(t1.status == Status::Pass);
    CHECK_FALSE(t1.first_failure.has_value());
    CHECK(t1.degrees_checked == 13);

    const auto t7 = verify_theorem({TheoremId::T7, 10, 4, std::nullopt});
    CHECK(t7.status == Status::Pass);
    CHECK(t7.degrees_checked == 7);
    CHECK(t7.degrees_skipped == 4);

    for (unsigned r = 0; r <= 3; ++r) {
        CHECK(verify_theorem({TheoremId::T4, 8, r, std::nullopt}).status == Status::Pass);
        CHECK(verify_theorem({TheoremId::T5, 8, r, std::nullopt}).status == Status::Pass);
    }
    CHECK(error_code_of([] { verify_theorem({TheoremId::T6, 5, 3, std::nullopt}); }) == Errc::RegimeViolation);
    CHECK(error_code_of([] { verify_theorem({TheoremId::T7, 2, 3, std::nullopt}); }) == Errc::RegimeViolation);
    CHECK(error_code_of([] { verify_theorem({TheoremId::T8, 6, 2, ExactScalar(1)}); }) == Errc::LambdaIsOne);
    CHECK(error_code_of([] { verify_theorem({TheoremId::T3, 6, 2, std::nullopt}); }) == Errc::InvalidArgument);
}

TEST_CASE("verify_cells is schedule independent") {
    std::vector<VerifyCell> cells;
    for (TheoremId id : all_theorems()) {
        const unsigned r = id == TheoremId::T6 ? 7 : 2;
        cells.push_back({id, 6, r, needs_lambda(id) ? std::optional<ExactScalar>(ratio(1, 3)) : std::nullopt});
    }
    const auto serial = verify_cells(cells, 1);
    const auto parallel = verify_cells(cells, 4);
    REQUIRE(serial.size() == cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(serial[i].theorem == cells[i].theorem);
        CHECK(parallel[i].theorem == serial[i].theorem);
        CHECK(parallel[i].status == Status::Pass);
        CHECK(parallel[i].lambda == serial[i].lambda);
    }
    cells.push_back({TheoremId::T6, 6, 2, std::nullopt});
    CHECK(error_code_of([&] { verify_cells(cells, 4); }) == Errc::RegimeViolation);
}

TEST_CASE("lambda samples") {
    const auto three = lambda_samples(3);
    CHECK(three == std::vector<ExactScalar>{-1, 2, ratio(1, 2)});
    const auto many = lambda_samples(25);
    CHECK(many.size() == 25);
    const std::set<ExactScalar> unique(many.begin(), many.end());
    CHECK(unique.size() == 25);
    CHECK(unique.count(1) == 0);
    const std::vector<ExactScalar> preferred{ratio(7, 3), -1};
    const auto pref = lambda_samples(4, preferred);
    CHECK(pref == std::vector<ExactScalar>{ratio(7, 3), -1, 2, ratio(1, 2)});
    const std::vector<ExactScalar> bad{1};
    CHECK(error_code_of([&] { lambda_samples(3, bad); }) == Errc::LambdaIsOne);
    CHECK(symbolic_sample_count(10, 4) == 15);
}

TEST_CASE("theorem ids") {
    for (TheoremId id : all_theorems()) CHECK(parse_theorem(to_string(id)) == id);
    CHECK(parse_theorem("T3") == TheoremId::T3);
    CHECK_FALSE(parse_theorem("t9").has_value());
}

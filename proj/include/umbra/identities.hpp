#pragma once

#include "umbra/families.hpp"
#include "umbra/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace umbra {

/// The eight connection identities and the closing double-sum variant.
///   T1  E^(r)_n        in the Hermite basis
///   T2  B^(r)_n        in the Hermite basis
///   T3  H^(r)_n(.|l)   in the Hermite basis
///   T4  H_n            in the Euler^(r) basis, double sum over (2j)^m
///   T5  H_n            in the Euler^(r) basis, Hermite values at integers
///   T6  H_n            in the Bernoulli^(r) basis, r > n
///   T7  H_n            in the Bernoulli^(r) basis, n >= r (piecewise in k)
///   T8  H_n            in the Frobenius-Euler^(r) basis
///   Remark             T8's table through the (2j)^m double sum
enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, Remark };

std::string_view to_string(TheoremId id) noexcept;
/// Accepts "t1".."t8" and "remark" (case-insensitive).
std::optional<TheoremId> parse_theorem(std::string_view text);
std::span<const TheoremId> all_theorems() noexcept;
bool needs_lambda(TheoremId id) noexcept;

/// Family on the left of the identity and the basis family on the right.
FamilySpec theorem_lhs(TheoremId id, unsigned r, const ExactScalar& lambda = 0);
FamilySpec theorem_basis(TheoremId id, unsigned r, const ExactScalar& lambda = 0);

/// Closed-form coefficients for one (r, lambda), with the number sequences,
/// Hermite values and Stirling numbers they consume tabulated up front for
/// every n <= n_max.
///
/// Entries with k > n are zero. Empty sums are zero. 0^0 = 1.
class TheoremFormulas {
public:
    /// Throws Error{LambdaIsOne} when lambda == 1.
    TheoremFormulas(std::size_t n_max, unsigned r, std::optional<ExactScalar> lambda = std::nullopt);

    std::size_t n_max() const noexcept { return n_max_; }
    unsigned order() const noexcept { return r_; }

    ExactScalar t1(std::size_t n, std::size_t k) const;
    ExactScalar t2(std::size_t n, std::size_t k) const;
    ExactScalar t3(std::size_t n, std::size_t k) const;
    ExactScalar t4(std::size_t n, std::size_t k) const;
    ExactScalar t5(std::size_t n, std::size_t k) const;
    /// Throws Error{RegimeViolation} unless r > n.
    ExactScalar t6(std::size_t n, std::size_t k) const;
    /// Throws Error{RegimeViolation} unless n >= r.
    ExactScalar t7(std::size_t n, std::size_t k) const;
    ExactScalar t8(std::size_t n, std::size_t k) const;
    ExactScalar remark(std::size_t n, std::size_t k) const;

    ExactScalar coeff(TheoremId id, std::size_t n, std::size_t k) const;

    /// The Stirling-number sum shared by T6 and the k < r branch of T7.
    ExactScalar stirling_branch(std::size_t n, std::size_t k) const;

private:
    void check_n(std::size_t n) const;
    const ExactScalar& lambda() const;
    /// (n-k)! sum_m (-1)^m (2j)^{n-k-2m} / (m! (n-k-2m)!), summed over j
    /// with weight C(r,j) w_j.
    ExactScalar double_sum(std::size_t n, std::size_t k, std::span<const ExactScalar> weights) const;
    /// n! sum_m a_{n-k-2m} / (k! (n-k-2m)! 2^{k+2m} m!).
    ExactScalar even_sum(std::size_t n, std::size_t k, std::span<const ExactScalar> numbers) const;
    const ExactScalar& hermite_value(std::size_t m, std::size_t j) const { return hermite_values_[m][j]; }
    ExactScalar fact(std::size_t n) const { return ExactScalar(factorials_[n]); }

    std::size_t n_max_;
    unsigned r_;
    std::optional<ExactScalar> lambda_;
    std::vector<BigInt> factorials_;
    std::vector<ExactScalar> euler_numbers_;
    std::vector<ExactScalar> bernoulli_numbers_;
    std::vector<ExactScalar> fe_numbers_;
    std::vector<std::vector<ExactScalar>> hermite_values_;  // [m][j] = H_m(j)
    std::vector<std::vector<ExactScalar>> stirling2_;  // [l][n] = S_2(l, n)
};

ExactScalar t1_coeff(std::size_t n, std::size_t k, unsigned r);
ExactScalar t2_coeff(std::size_t n, std::size_t k, unsigned r);
ExactScalar t3_coeff(std::size_t n, std::size_t k, unsigned r, const ExactScalar& lambda);
ExactScalar t4_coeff(std::size_t n, std::size_t k, unsigned r);
ExactScalar t5_coeff(std::size_t n, std::size_t k, unsigned r);
ExactScalar t6_coeff(std::size_t n, std::size_t k, unsigned r);
ExactScalar t7_coeff(std::size_t n, std::size_t k, unsigned r);
ExactScalar t8_coeff(std::size_t n, std::size_t k, unsigned r, const ExactScalar& lambda);
ExactScalar remark_coeff(std::size_t n, std::size_t k, unsigned r, const ExactScalar& lambda);

struct VerifyCell {
    TheoremId theorem = TheoremId::T1;
    std::size_t n_max = 0;
    unsigned r = 0;
    std::optional<ExactScalar> lambda;
};

struct Mismatch {
    std::size_t n = 0;
    std::size_t power = 0;    // index of the x^power coefficient that differs
    ExactScalar expected;     // left-hand side
    ExactScalar got;          // right-hand side
};

enum class Status { Pass, Fail };

struct IdentityReport {
    TheoremId theorem = TheoremId::T1;
    std::size_t n_max = 0;
    unsigned r = 0;
    std::optional<ExactScalar> lambda;
    Status status = Status::Pass;
    std::optional<Mismatch> first_failure;
    std::size_t degrees_checked = 0;
    std::size_t degrees_skipped = 0;
};

/// Throws Error{RegimeViolation}, Error{LambdaIsOne} or
/// Error{InvalidArgument} for a cell outside its theorem's hypotheses.
void validate_cell(const VerifyCell& cell);

/// Builds both sides of the identity for every n <= n_max and compares their
/// coefficient vectors exactly. T7 skips n < r.
IdentityReport verify_theorem(const VerifyCell& cell);

/// Verifies every cell, splitting the work across up to `threads` workers.
/// Reports come back in input order. All cells are validated before any
/// work starts.
std::vector<IdentityReport> verify_cells(std::span<const VerifyCell> cells, unsigned threads);

/// `count` distinct rationals != 1: those in `preferred` first, then the
/// fixed sequence -1, 2, 1/2, 3, -2, 5, ... Throws Error{LambdaIsOne} if
/// `preferred` contains 1.
std::vector<ExactScalar> lambda_samples(std::size_t count, std::span<const ExactScalar> preferred = {});

/// Number of distinct lambda samples that pins down the lambda-dependent
/// identities for every lambda != 1. With u = 1/(1 - lambda), every
/// coefficient of LHS - RHS is a polynomial in u of degree at most n + r,
/// and distinct lambdas give distinct u.
inline std::size_t symbolic_sample_count(std::size_t n_max, unsigned r) { return n_max + r + 1; }

}  // namespace umbra

#include "umbra/identities.hpp"

#include "umbra/error.hpp"
#include "umbra/umbral.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <exception>
#include <set>
#include <string>
#include <thread>

namespace umbra {

namespace {

constexpr std::array<TheoremId, 9> kAllTheorems = {TheoremId::T1, TheoremId::T2, TheoremId::T3,
                                                   TheoremId::T4, TheoremId::T5, TheoremId::T6,
                                                   TheoremId::T7, TheoremId::T8, TheoremId::Remark};

ExactScalar pow2(long e) {
    ExactScalar out(1);
    if (e >= 0) {
        mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<unsigned long>(-e));
    }
    return out;
}

ExactScalar sign(std::size_t e) { return e % 2 == 0 ? ExactScalar(1) : ExactScalar(-1); }

ExactScalar to_q(const BigInt& z) { return ExactScalar(z); }

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
    switch (id) {
    case TheoremId::T1: return "t1";
    case TheoremId::T2: return "t2";
    case TheoremId::T3: return "t3";
    case TheoremId::T4: return "t4";
    case TheoremId::T5: return "t5";
    case TheoremId::T6: return "t6";
    case TheoremId::T7: return "t7";
    case TheoremId::T8: return "t8";
    case TheoremId::Remark: return "remark";
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (TheoremId id : kAllTheorems) {
        if (to_string(id) == lower) return id;
    }
    return std::nullopt;
}

std::span<const TheoremId> all_theorems() noexcept { return kAllTheorems; }

bool needs_lambda(TheoremId id) noexcept {
    return id == TheoremId::T3 || id == TheoremId::T8 || id == TheoremId::Remark;
}

FamilySpec theorem_lhs(TheoremId id, unsigned r, const ExactScalar& lambda) {
    switch (id) {
    case TheoremId::T1: return FamilySpec::euler(r);
    case TheoremId::T2: return FamilySpec::bernoulli(r);
    case TheoremId::T3: return FamilySpec::frobenius_euler(r, lambda);
    default: return FamilySpec::hermite();
    }
}

FamilySpec theorem_basis(TheoremId id, unsigned r, const ExactScalar& lambda) {
    switch (id) {
    case TheoremId::T1:
    case TheoremId::T2:
    case TheoremId::T3: return FamilySpec::hermite();
    case TheoremId::T4:
    case TheoremId::T5: return FamilySpec::euler(r);
    case TheoremId::T6:
    case TheoremId::T7: return FamilySpec::bernoulli(r);
    case TheoremId::T8:
    case TheoremId::Remark: return FamilySpec::frobenius_euler(r, lambda);
    }
    throw Error(Errc::InvalidArgument, "unknown theorem");
}

TheoremFormulas::TheoremFormulas(std::size_t n_max, unsigned r, std::optional<ExactScalar> lambda)
    : n_max_(n_max), r_(r), lambda_(std::move(lambda)) {
    if (lambda_ && *lambda_ == 1) {
        throw Error(Errc::LambdaIsOne, "lambda = 1 is excluded");
    }
    const std::size_t top = n_max + r;
    factorials_.reserve(top + 1);
    for (std::size_t i = 0; i <= top; ++i) factorials_.push_back(i == 0 ? BigInt(1) : factorials_.back() * i);

    euler_numbers_ = family_numbers(FamilySpec::euler(r), n_max);
    bernoulli_numbers_ = family_numbers(FamilySpec::bernoulli(r), n_max);
    if (lambda_) fe_numbers_ = family_numbers(FamilySpec::frobenius_euler(r, *lambda_), n_max);

    const auto hermite = family_polys(FamilySpec::hermite(), n_max);
    const std::size_t j_max = std::max<std::size_t>(r, n_max);
    hermite_values_.resize(n_max + 1);
    for (std::size_t m = 0; m <= n_max; ++m) {
        hermite_values_[m].reserve(j_max + 1);
        for (std::size_t j = 0; j <= j_max; ++j) {
            hermite_values_[m].push_back(eval(hermite[m], ExactScalar(static_cast<unsigned long>(j))));
        }
    }
    stirling2_ = stirling2_table(top);
}

void TheoremFormulas::check_n(std::size_t n) const {
    if (n > n_max_) {
        throw Error(Errc::InvalidArgument, "degree " + std::to_string(n) + " beyond tabulated n_max " +
                                               std::to_string(n_max_));
    }
}

const ExactScalar& TheoremFormulas::lambda() const {
    if (!lambda_) throw Error(Errc::InvalidArgument, "this identity needs a lambda value");
    return *lambda_;
}

ExactScalar TheoremFormulas::even_sum(std::size_t n, std::size_t k, std::span<const ExactScalar> numbers) const {
    check_n(n);
    if (k > n) return 0;
    ExactScalar acc = 0;
    for (std::size_t m = 0; 2 * m <= n - k; ++m) {
        const std::size_t rest = n - k - 2 * m;
        acc += numbers[rest] / (fact(k) * fact(rest) * pow2(static_cast<long>(k + 2 * m)) * fact(m));
    }
    return fact(n) * acc;
}

ExactScalar TheoremFormulas::double_sum(std::size_t n, std::size_t k, std::span<const ExactScalar> weights) const {
    check_n(n);
    if (k > n) return 0;
    const ExactScalar head = to_q(binomial(n, k)) * pow2(static_cast<long>(k)) * fact(n - k);
    ExactScalar acc = 0;
    for (std::size_t j = 0; j <= r_; ++j) {
        if (sgn(weights[j]) == 0) continue;
        ExactScalar inner = 0;
        for (std::size_t m = 0; 2 * m <= n - k; ++m) {
            const std::size_t e = n - k - 2 * m;
            inner += sign(m) * power(ExactScalar(static_cast<unsigned long>(2 * j)), e) / (fact(m) * fact(e));
        }
        acc += to_q(binomial(r_, j)) * weights[j] * inner;
    }
    return head * acc;
}

ExactScalar TheoremFormulas::t1(std::size_t n, std::size_t k) const { return even_sum(n, k, euler_numbers_); }

ExactScalar TheoremFormulas::t2(std::size_t n, std::size_t k) const { return even_sum(n, k, bernoulli_numbers_); }

ExactScalar TheoremFormulas::t3(std::size_t n, std::size_t k) const {
    lambda();
    return even_sum(n, k, fe_numbers_);
}

ExactScalar TheoremFormulas::t4(std::size_t n, std::size_t k) const {
    const std::vector<ExactScalar> ones(r_ + 1, ExactScalar(1));
    return double_sum(n, k, ones) * pow2(-static_cast<long>(r_));
}

ExactScalar TheoremFormulas::t5(std::size_t n, std::size_t k) const {
    check_n(n);
    if (k > n) return 0;
    ExactScalar acc = 0;
    for (std::size_t j = 0; j <= r_; ++j) acc += to_q(binomial(r_, j)) * hermite_value(n - k, j);
    return pow2(static_cast<long>(k) - static_cast<long>(r_)) * to_q(binomial(n, k)) * acc;
}

ExactScalar TheoremFormulas::stirling_branch(std::size_t n, std::size_t k) const {
    check_n(n);
    if (k > n || k > r_) return 0;
    const std::size_t d = r_ - k;
    ExactScalar acc = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        const ExactScalar outer = sign(k - j) * to_q(binomial(k, j));
        for (std::size_t l = 0; l <= n; ++l) {
            const ExactScalar& s2 = stirling2_[l + d][d];
            if (sgn(s2) == 0) continue;
            acc += outer * fact(d) * s2 * pow2(static_cast<long>(l)) * hermite_value(n - l, j) /
                   (fact(l + d) * fact(k) * fact(n - l));
        }
    }
    return fact(n) * acc;
}

ExactScalar TheoremFormulas::t6(std::size_t n, std::size_t k) const {
    if (r_ <= n) {
        throw Error(Errc::RegimeViolation, "t6 needs r > n (r = " + std::to_string(r_) + ", n = " +
                                               std::to_string(n) + ")");
    }
    return stirling_branch(n, k);
}

ExactScalar TheoremFormulas::t7(std::size_t n, std::size_t k) const {
    if (n < r_) {
        throw Error(Errc::RegimeViolation, "t7 needs n >= r (r = " + std::to_string(r_) + ", n = " +
                                               std::to_string(n) + ")");
    }
    check_n(n);
    if (k > n) return 0;
    if (k < r_) return stirling_branch(n, k);
    const std::size_t m = n - k + r_;
    ExactScalar acc = 0;
    for (std::size_t j = 0; j <= r_; ++j) acc += sign(r_ - j) * to_q(binomial(r_, j)) * hermite_value(m, j);
    return pow2(static_cast<long>(k - r_)) * fact(n) / (fact(k) * fact(m)) * acc;
}

ExactScalar TheoremFormulas::t8(std::size_t n, std::size_t k) const {
    const ExactScalar& lam = lambda();
    check_n(n);
    if (k > n) return 0;
    ExactScalar acc = 0;
    for (std::size_t j = 0; j <= r_; ++j) {
        acc += to_q(binomial(r_, j)) * power(-lam, r_ - j) * hermite_value(n - k, j);
    }
    return to_q(binomial(n, k)) * pow2(static_cast<long>(k)) * acc / power(1 - lam, r_);
}

ExactScalar TheoremFormulas::remark(std::size_t n, std::size_t k) const {
    const ExactScalar& lam = lambda();
    std::vector<ExactScalar> weights;
    weights.reserve(r_ + 1);
    for (std::size_t j = 0; j <= r_; ++j) weights.push_back(power(-lam, r_ - j));
    return double_sum(n, k, weights) / power(1 - lam, r_);
}

ExactScalar TheoremFormulas::coeff(TheoremId id, std::size_t n, std::size_t k) const {
    switch (id) {
    case TheoremId::T1: return t1(n, k);
    case TheoremId::T2: return t2(n, k);
    case TheoremId::T3: return t3(n, k);
    case TheoremId::T4: return t4(n, k);
    case TheoremId::T5: return t5(n, k);
    case TheoremId::T6: return t6(n, k);
    case TheoremId::T7: return t7(n, k);
    case TheoremId::T8: return t8(n, k);
    case TheoremId::Remark: return remark(n, k);
    }
    throw Error(Errc::InvalidArgument, "unknown theorem");
}

ExactScalar t1_coeff(std::size_t n, std::size_t k, unsigned r) { return TheoremFormulas(n, r).t1(n, k); }
ExactScalar t2_coeff(std::size_t n, std::size_t k, unsigned r) { return TheoremFormulas(n, r).t2(n, k); }
ExactScalar t3_coeff(std::size_t n, std::size_t k, unsigned r, const ExactScalar& lambda) {
    return TheoremFormulas(n, r, lambda).t3(n, k);
}
ExactScalar t4_coeff(std::size_t n, std::size_t k, unsigned r) { return TheoremFormulas(n, r).t4(n, k); }
ExactScalar t5_coeff(std::size_t n, std::size_t k, unsigned r) { return TheoremFormulas(n, r).t5(n, k); }
ExactScalar t6_coeff(std::size_t n, std::size_t k, unsigned r) { return TheoremFormulas(n, r).t6(n, k); }
ExactScalar t7_coeff(std::size_t n, std::size_t k, unsigned r) { return TheoremFormulas(n, r).t7(n, k); }
ExactScalar t8_coeff(std::size_t n, std::size_t k, unsigned r, const ExactScalar& lambda) {
    return TheoremFormulas(n, r, lambda).t8(n, k);
}
ExactScalar remark_coeff(std::size_t n, std::size_t k, unsigned r, const ExactScalar& lambda) {
    return TheoremFormulas(n, r, lambda).remark(n, k);
}

void validate_cell(const VerifyCell& cell) {
    const std::string name(to_string(cell.theorem));
    if (needs_lambda(cell.theorem)) {
        if (!cell.lambda) throw Error(Errc::InvalidArgument, name + " needs a lambda value");
        if (*cell.lambda == 1) throw Error(Errc::LambdaIsOne, name + " is undefined at lambda = 1");
    }
    if (cell.theorem == TheoremId::T6 && cell.r <= cell.n_max) {
        throw Error(Errc::RegimeViolation, "t6 holds for r > n; r = " + std::to_string(cell.r) +
                                               " does not exceed max n = " + std::to_string(cell.n_max));
    }
    if (cell.theorem == TheoremId::T7 && cell.n_max < cell.r) {
        throw Error(Errc::RegimeViolation, "t7 holds for n >= r; no n <= " + std::to_string(cell.n_max) +
                                               " reaches r = " + std::to_string(cell.r));
    }
}

IdentityReport verify_theorem(const VerifyCell& cell) {
    validate_cell(cell);
    const ExactScalar lam = cell.lambda.value_or(0);
    const std::optional<ExactScalar> formula_lambda =
        needs_lambda(cell.theorem) ? cell.lambda : std::optional<ExactScalar>{};
    const TheoremFormulas formulas(cell.n_max, cell.r, formula_lambda);
    const auto lhs = family_polys(theorem_lhs(cell.theorem, cell.r, lam), cell.n_max);
    const auto basis = family_polys(theorem_basis(cell.theorem, cell.r, lam), cell.n_max);

    IdentityReport report{cell.theorem, cell.n_max, cell.r, formula_lambda, Status::Pass, std::nullopt, 0, 0};
    for (std::size_t n = 0; n <= cell.n_max; ++n) {
        if (cell.theorem == TheoremId::T7 && n < cell.r) {
            ++report.degrees_skipped;
            continue;
        }
        Poly rhs;
        for (std::size_t k = 0; k <= n; ++k) {
            const ExactScalar c = formulas.coeff(cell.theorem, n, k);
            if (sgn(c) != 0) rhs = add(rhs, scale(basis[k], c));
        }
        ++report.degrees_checked;
        if (rhs == lhs[n]) continue;
        for (std::size_t i = 0; i <= n; ++i) {
            if (lhs[n].coeff(i) != rhs.coeff(i)) {
                report.status = Status::Fail;
                report.first_failure = Mismatch{n, i, lhs[n].coeff(i), rhs.coeff(i)};
                return report;
            }
        }
    }
    return report;
}

std::vector<IdentityReport> verify_cells(std::span<const VerifyCell> cells, unsigned threads) {
    for (const auto& cell : cells) validate_cell(cell);
    std::vector<IdentityReport> reports(cells.size());
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(cells.size(), 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) reports[i] = verify_theorem(cells[i]);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < cells.size(); i = next++) reports[i] = verify_theorem(cells[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return reports;
}

std::vector<ExactScalar> lambda_samples(std::size_t count, std::span<const ExactScalar> preferred) {
    std::vector<ExactScalar> out;
    std::set<ExactScalar> seen;
    auto offer = [&](const ExactScalar& q) {
        if (out.size() < count && q != 1 && seen.insert(q).second) out.push_back(q);
    };
    for (const auto& q : preferred) {
        if (q == 1) throw Error(Errc::LambdaIsOne, "lambda = 1 is excluded");
        offer(q);
    }
    for (const ExactScalar& q : {ratio(-1, 1), ratio(2, 1), ratio(1, 2), ratio(3, 1), ratio(-2, 1), ratio(5, 1)}) {
        offer(q);
    }
    for (long m = 2; out.size() < count; ++m) {
        for (const ExactScalar& q : {ratio(m, 1), ratio(-m, 1), ratio(1, m), ratio(-1, m), ratio(m, m + 1),
                                     ratio(-m, m + 1)}) {
            offer(q);
        }
    }
    return out;
}

}  // namespace umbra

#include "umbra/poly.hpp"

#include "umbra/series.hpp"

#include <algorithm>

namespace umbra {

namespace {

void trim(std::vector<ExactScalar>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Poly Poly::constant(const ExactScalar& c) { return Poly(std::vector<ExactScalar>{c}); }

Poly Poly::monomial(std::size_t n, const ExactScalar& c) {
    std::vector<ExactScalar> v(n + 1);
    v[n] = c;
    return Poly(std::move(v));
}

ExactScalar Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ExactScalar(0);
}

Poly add(const Poly& p, const Poly& q) {
    std::vector<ExactScalar> v(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) + q.coeff(i);
    return Poly(std::move(v));
}

Poly sub(const Poly& p, const Poly& q) {
    std::vector<ExactScalar> v(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) - q.coeff(i);
    return Poly(std::move(v));
}

Poly scale(const Poly& p, const ExactScalar& c) {
    std::vector<ExactScalar> v(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

Poly mul(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    std::vector<ExactScalar> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    }
    return Poly(std::move(v));
}

Poly dilate(const Poly& p, const ExactScalar& c) {
    std::vector<ExactScalar> v(p.coeffs().begin(), p.coeffs().end());
    ExactScalar f = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        f *= c;
        v[i] *= f;
    }
    return Poly(std::move(v));
}

Poly derivative(const Poly& p, std::size_t k) {
    const auto c = p.coeffs();
    if (k >= c.size()) return {};
    std::vector<ExactScalar> v(c.size() - k);
    for (std::size_t i = 0; i < v.size(); ++i) {
        // (i+k)! / i!
        BigInt fall = 1;
        for (std::size_t m = i + 1; m <= i + k; ++m) fall *= static_cast<unsigned long>(m);
        v[i] = c[i + k] * ExactScalar(fall);
    }
    return Poly(std::move(v));
}

ExactScalar eval(const Poly& p, const ExactScalar& a) {
    ExactScalar acc = 0;
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i];
    return acc;
}

Poly falling_factorial(std::size_t n) {
    Poly out = Poly::constant(1);
    for (std::size_t m = 0; m < n; ++m) {
        out = mul(out, Poly(std::vector<ExactScalar>{-ExactScalar(static_cast<unsigned long>(m)), 1}));
    }
    return out;
}

ExactScalar stirling1(std::size_t n, std::size_t l) {
    if (l > n) return 0;
    return falling_factorial(n).coeff(l);
}

ExactScalar stirling2(std::size_t l, std::size_t n) {
    if (l < n) return 0;
    const Series em1 = sub(Series::exp_linear(1, l), Series::constant(1, l));
    const Series p = pow_int(em1, n);
    return p[l] * ExactScalar(factorial(l)) / ExactScalar(factorial(n));
}

std::vector<std::vector<ExactScalar>> stirling2_table(std::size_t max) {
    std::vector<std::vector<ExactScalar>> table(max + 1, std::vector<ExactScalar>(max + 1));
    const Series em1 = sub(Series::exp_linear(1, max), Series::constant(1, max));
    Series p = Series::constant(1, max);
    for (std::size_t n = 0; n <= max; ++n) {
        if (n > 0) p = mul(p, em1);
        const ExactScalar nf(factorial(n));
        for (std::size_t l = n; l <= max; ++l) table[l][n] = p[l] * ExactScalar(factorial(l)) / nf;
    }
    return table;
}

}  // namespace umbra

#include "umbra/series.hpp"

#include "umbra/error.hpp"

#include <algorithm>
#include <string>

namespace umbra {

Series::Series(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(Errc::InvalidArgument, "a series needs at least the constant coefficient");
    }
}

Series Series::zero(std::size_t trunc_order) {
    return Series(std::vector<ExactScalar>(trunc_order + 1));
}

Series Series::constant(const ExactScalar& c, std::size_t trunc_order) {
    std::vector<ExactScalar> v(trunc_order + 1);
    v[0] = c;
    return Series(std::move(v));
}

Series Series::monomial(std::size_t k, std::size_t trunc_order, const ExactScalar& c) {
    std::vector<ExactScalar> v(trunc_order + 1);
    if (k <= trunc_order) v[k] = c;
    return Series(std::move(v));
}

Series Series::exp_linear(const ExactScalar& a, std::size_t trunc_order) {
    std::vector<ExactScalar> v(trunc_order + 1);
    v[0] = 1;
    for (std::size_t k = 1; k <= trunc_order; ++k) {
        v[k] = v[k - 1] * a / static_cast<unsigned long>(k);
    }
    return Series(std::move(v));
}

ExactScalar Series::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : ExactScalar(0);
}

std::optional<std::size_t> order(const Series& f) {
    const auto c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) != 0) return k;
    }
    return std::nullopt;
}

Series truncate(const Series& f, std::size_t trunc_order) {
    const auto c = f.coeffs();
    std::vector<ExactScalar> v(trunc_order + 1);
    std::copy_n(c.begin(), std::min(c.size(), v.size()), v.begin());
    return Series(std::move(v));
}

Series add(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.trunc_order(), g.trunc_order());
    std::vector<ExactScalar> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = f[k] + g[k];
    return Series(std::move(v));
}

Series sub(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.trunc_order(), g.trunc_order());
    std::vector<ExactScalar> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = f[k] - g[k];
    return Series(std::move(v));
}

Series negate(const Series& f) {
    std::vector<ExactScalar> v(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : v) c = -c;
    return Series(std::move(v));
}

Series scale(const Series& f, const ExactScalar& c) {
    std::vector<ExactScalar> v(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : v) x *= c;
    return Series(std::move(v));
}

Series mul(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.trunc_order(), g.trunc_order());
    const auto fo = order(f);
    const auto go = order(g);
    std::vector<ExactScalar> v(n + 1);
    if (!fo || !go) return Series(std::move(v));
    // Coefficients below each operand's order are zero.
    ExactScalar term;
    for (std::size_t k = *fo + *go; k <= n; ++k) {
        ExactScalar& acc = v[k];
        for (std::size_t i = *fo; i + *go <= k; ++i) {
            if (sgn(f[i]) == 0) continue;
            term = f[i] * g[k - i];
            acc += term;
        }
    }
    return Series(std::move(v));
}

Series dilate(const Series& f, const ExactScalar& c) {
    std::vector<ExactScalar> v(f.coeffs().begin(), f.coeffs().end());
    ExactScalar p = 1;
    for (std::size_t k = 1; k < v.size(); ++k) {
        p *= c;
        v[k] *= p;
    }
    return Series(std::move(v));
}

Series shift_down(const Series& f, std::size_t s) {
    const std::size_t n = f.trunc_order();
    if (s > n) {
        throw Error(Errc::TruncationTooShort, "cannot divide a series known to degree " + std::to_string(n) +
                                                  " by t^" + std::to_string(s));
    }
    for (std::size_t k = 0; k < s; ++k) {
        if (sgn(f[k]) != 0) {
            throw Error(Errc::InvalidArgument, "series is not divisible by t^" + std::to_string(s));
        }
    }
    std::vector<ExactScalar> v(f.coeffs().begin() + static_cast<std::ptrdiff_t>(s), f.coeffs().end());
    return Series(std::move(v));
}

Series reciprocal(const Series& f) {
    if (sgn(f[0]) == 0) {
        throw Error(Errc::NotInvertible, "constant coefficient is zero");
    }
    const std::size_t n = f.trunc_order();
    const ExactScalar inv0 = 1 / f[0];
    // c_0 h_k = delta_{k0} - sum_{i>=1} c_i h_{k-i}
    std::vector<ExactScalar> h(n + 1);
    h[0] = inv0;
    ExactScalar acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (sgn(f[i]) != 0) acc += f[i] * h[k - i];
        }
        h[k] = -acc * inv0;
    }
    return Series(std::move(h));
}

Series compose(const Series& f, const Series& g) {
    if (sgn(g[0]) != 0) {
        throw Error(Errc::CompositionOrder, "inner series has a nonzero constant term");
    }
    const std::size_t n = std::min(f.trunc_order(), g.trunc_order());
    const Series inner = truncate(g, n);
    // Horner: c_0 + g (c_1 + g (c_2 + ...)). Since g has order >= 1, terms
    // beyond degree n never reach the result.
    Series acc = Series::constant(f[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, inner);
        std::vector<ExactScalar> v(acc.coeffs().begin(), acc.coeffs().end());
        v[0] += f[k];
        acc = Series(std::move(v));
    }
    return acc;
}

Series comp_inverse(const Series& f) {
    if (f.trunc_order() < 1 || sgn(f[0]) != 0 || sgn(f[1]) == 0) {
        throw Error(Errc::NotDelta, "compositional inverse needs c_0 = 0 and c_1 != 0");
    }
    const std::size_t n = f.trunc_order();
    // fbar(f(t)) = sum_k b_k f^k = t. Matching the t^m coefficient is
    // triangular in b because f^k has order k and leading coeff c_1^k:
    //   b_m c_1^m = delta_{m1} - sum_{k<m} b_k [t^m] f^k.
    std::vector<Series> powers;
    powers.reserve(n + 1);
    powers.push_back(Series::constant(1, n));
    for (std::size_t k = 1; k <= n; ++k) powers.push_back(mul(powers.back(), f));

    std::vector<ExactScalar> b(n + 1);
    ExactScalar acc;
    for (std::size_t m = 1; m <= n; ++m) {
        acc = m == 1 ? 1 : 0;
        for (std::size_t k = 1; k < m; ++k) {
            if (sgn(b[k]) != 0) acc -= b[k] * powers[k][m];
        }
        b[m] = acc / powers[m][m];
    }
    return Series(std::move(b));
}

Series exp_series(const Series& f) {
    if (sgn(f[0]) != 0) {
        throw Error(Errc::ExpConstantTerm, "exp needs a series without constant term");
    }
    const std::size_t n = f.trunc_order();
    // h = exp(f) satisfies h' = f' h, i.e. m h_m = sum_{j=1}^{m} j f_j h_{m-j}.
    std::vector<ExactScalar> h(n + 1);
    h[0] = 1;
    ExactScalar acc;
    for (std::size_t m = 1; m <= n; ++m) {
        acc = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            if (sgn(f[j]) != 0) acc += static_cast<unsigned long>(j) * f[j] * h[m - j];
        }
        h[m] = acc / static_cast<unsigned long>(m);
    }
    return Series(std::move(h));
}

Series pow_int(const Series& f, std::size_t k) {
    Series result = Series::constant(1, f.trunc_order());
    Series base = f;
    while (k > 0) {
        if (k & 1U) result = mul(result, base);
        k >>= 1U;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

}  // namespace umbra

#pragma once

// Independent reference computations used only by the tests. Each one takes a
// different route from the library code it is compared against.

#include "umbra/error.hpp"
#include "umbra/poly.hpp"
#include "umbra/series.hpp"

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace umbra::oracle {

template <class F>
Errc error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected umbra::Error");
}

/// Number of partitions of {1..l} into exactly n nonempty blocks, by
/// enumerating restricted growth strings.
inline long set_partitions(std::size_t l, std::size_t n) {
    if (l == 0) return n == 0 ? 1 : 0;
    std::vector<std::size_t> a(l, 0);
    long count = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
        if (i == l) {
            if (blocks == n) ++count;
            return;
        }
        for (std::size_t b = 0; b <= blocks; ++b) {
            a[i] = b;
            rec(i + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    rec(0, 0);
    return count;
}

/// sum_k c_k g^k with explicit powers (no Horner).
inline Series compose_by_powers(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.trunc_order(), g.trunc_order());
    Series acc = Series::zero(n);
    Series p = Series::constant(1, n);
    for (std::size_t k = 0; k <= n; ++k) {
        acc = acc + scale(p, f[k]);
        p = p * truncate(g, n);
    }
    return acc;
}

/// sum_j f^j / j! through degree N.
inline Series exp_by_sum(const Series& f) {
    const std::size_t n = f.trunc_order();
    Series acc = Series::zero(n);
    Series p = Series::constant(1, n);
    for (std::size_t j = 0; j <= n; ++j) {
        acc = acc + scale(p, ExactScalar(1) / ExactScalar(factorial(j)));
        p = p * f;
    }
    return acc;
}

/// Lagrange inversion: [t^n] fbar = (1/n) [t^{n-1}] (t / f(t))^n.
inline Series lagrange_inverse(const Series& f) {
    const std::size_t n = f.trunc_order();
    const Series t_over_f = reciprocal(shift_down(f, 1));  // known to degree n-1
    std::vector<ExactScalar> b(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        b[m] = pow_int(t_over_f, m)[m - 1] / static_cast<unsigned long>(m);
    }
    return Series(std::move(b));
}

/// Physicists' Hermite H_n from e^{2xt - t^2} = e^{-t^2} e^{2xt}, with the
/// coefficients of e^{-t^2} written down directly.
inline Poly hermite_by_generating_function(std::size_t n) {
    std::vector<ExactScalar> c(n + 1);
    // [t^n] = sum_m (-1)^m / m! * (2x)^{n-2m} / (n-2m)!
    for (std::size_t m = 0; 2 * m <= n; ++m) {
        const std::size_t j = n - 2 * m;
        ExactScalar term = ExactScalar(factorial(n)) * power(2, j) / (ExactScalar(factorial(m)) * ExactScalar(factorial(j)));
        c[j] += m % 2 == 0 ? term : ExactScalar(-term);
    }
    return Poly(std::move(c));
}

/// Appell member n from a kernel K(t): n! [t^n] K(t) e^{xt}.
inline Poly appell_by_kernel(const Series& kernel, std::size_t n) {
    std::vector<ExactScalar> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        c[j] = ExactScalar(factorial(n)) * kernel[n - j] / ExactScalar(factorial(j));
    }
    return Poly(std::move(c));
}

/// Solves c_0 h_k = delta_{k0} - sum_{i>=1} c_i h_{k-i} by plain long
/// division of 1 by f, written independently of the library kernel.
inline std::vector<ExactScalar> divide_one_by(const std::vector<ExactScalar>& f, std::size_t n) {
    std::vector<ExactScalar> rem(n + 1);
    rem[0] = 1;
    std::vector<ExactScalar> q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        q[k] = rem[k] / f[0];
        for (std::size_t i = 0; i < f.size() && k + i <= n; ++i) rem[k + i] -= q[k] * f[i];
    }
    return q;
}

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    ExactScalar rational(long span = 9, long den_span = 6) {
        std::uniform_int_distribution<long> num(-span, span);
        std::uniform_int_distribution<long> den(1, den_span);
        return ratio(num(rng_), den(rng_));
    }
    ExactScalar nonzero(long span = 9, long den_span = 6) {
        for (;;) {
            ExactScalar q = rational(span, den_span);
            if (sgn(q) != 0) return q;
        }
    }
    Series series(std::size_t n, std::size_t min_order = 0) {
        std::vector<ExactScalar> c(n + 1);
        for (std::size_t k = min_order; k <= n; ++k) c[k] = rational();
        return Series(std::move(c));
    }
    Series invertible(std::size_t n) {
        Series s = series(n);
        std::vector<ExactScalar> c(s.coeffs().begin(), s.coeffs().end());
        c[0] = nonzero();
        return Series(std::move(c));
    }
    Series delta(std::size_t n) {
        std::vector<ExactScalar> c(n + 1);
        c[1] = nonzero();
        for (std::size_t k = 2; k <= n; ++k) c[k] = rational();
        return Series(std::move(c));
    }
    Poly poly(std::size_t degree) {
        std::vector<ExactScalar> c(degree + 1);
        for (auto& x : c) x = rational();
        return Poly(std::move(c));
    }
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

private:
    std::mt19937 rng_;
};

}  // namespace umbra::oracle

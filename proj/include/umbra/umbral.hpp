#pragma once

#include "umbra/poly.hpp"
#include "umbra/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace umbra {

/// <f(t) | p(x)>: with f stored by ordinary coefficients c_n this is
/// sum_n n! c_n p_n. Throws Error{TruncationTooShort} when f is not known
/// through degree(p).
ExactScalar pair_functional(const Series& f, const Poly& p);

/// f(t) acting on p as the differential operator sum_k c_k d^k/dx^k.
Poly operator_apply(const Series& f, const Poly& p);

/// (g, f) with g invertible and f a delta series. The compositional inverse
/// of f is computed once at construction.
class ShefferPair {
public:
    /// Throws Error{NotInvertible} or Error{NotDelta} when the orders are
    /// wrong. Both series are truncated to the smaller of their orders.
    ShefferPair(Series g, Series f);

    const Series& g() const noexcept { return g_; }
    const Series& f() const noexcept { return f_; }
    const Series& fbar() const noexcept { return fbar_; }
    std::size_t trunc_order() const noexcept { return g_.trunc_order(); }

    /// The same pair known to a lower degree.
    ShefferPair truncated(std::size_t trunc_order) const;

private:
    ShefferPair(Series g, Series f, Series fbar);

    Series g_;
    Series f_;
    Series fbar_;
};

/// S_0 .. S_{n_max} for the pair, read off 1/g(fbar(t)) e^{y fbar(t)}.
std::vector<Poly> sheffer_sequence(const ShefferPair& pair, std::size_t n_max);
Poly sheffer_poly(const ShefferPair& pair, std::size_t n);

/// Lower-triangular table C(n, k), 0 <= k <= n <= n_max, one row per n.
class ConnectionMatrix {
public:
    explicit ConnectionMatrix(std::vector<std::vector<ExactScalar>> rows);

    static ConnectionMatrix identity(std::size_t n_max);

    std::size_t n_max() const noexcept { return rows_.size() - 1; }
    const ExactScalar& at(std::size_t n, std::size_t k) const { return rows_[n][k]; }
    std::span<const ExactScalar> row(std::size_t n) const { return rows_[n]; }

    friend bool operator==(const ConnectionMatrix&, const ConnectionMatrix&) = default;

private:
    std::vector<std::vector<ExactScalar>> rows_;
};

/// Coefficients with S_n = sum_k C(n,k) r_k where S ~ source = (g, f) and
/// r ~ target = (h, l), from the transfer formula
///   C(n,k) = (1/k!) < h(fbar) / g(fbar) * l(fbar)^k | x^n >.
ConnectionMatrix connection_coeffs(const ShefferPair& source, const ShefferPair& target, std::size_t n_max);

/// Same table by building both sequences explicitly and solving each row
/// S_n = sum_k C(n,k) r_k by back substitution. Throws Error{SingularBasis}
/// when some r_k does not have degree exactly k.
ConnectionMatrix connection_oracle(const ShefferPair& source, const ShefferPair& target, std::size_t n_max);

/// C(A -> C) from C(A -> B) and C(B -> C).
ConnectionMatrix chain(const ConnectionMatrix& a_to_b, const ConnectionMatrix& b_to_c);

}  // namespace umbra

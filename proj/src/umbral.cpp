#include "umbra/umbral.hpp"

#include "umbra/error.hpp"

#include <algorithm>
#include <string>

namespace umbra {

namespace {

void require_known_through(const Series& f, const Poly& p) {
    if (p.degree() > static_cast<long>(f.trunc_order())) {
        throw Error(Errc::TruncationTooShort, "series known to degree " + std::to_string(f.trunc_order()) +
                                                  " paired with a polynomial of degree " +
                                                  std::to_string(p.degree()));
    }
}

void require_order(const ShefferPair& pair, std::size_t n) {
    if (pair.trunc_order() < n) {
        throw Error(Errc::TruncationTooShort, "Sheffer pair known to degree " + std::to_string(pair.trunc_order()) +
                                                  ", degree " + std::to_string(n) + " requested");
    }
}

}  // namespace

ExactScalar pair_functional(const Series& f, const Poly& p) {
    require_known_through(f, p);
    ExactScalar acc = 0;
    BigInt fact = 1;
    const auto c = p.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        if (sgn(c[n]) != 0 && sgn(f[n]) != 0) acc += ExactScalar(fact) * f[n] * c[n];
    }
    return acc;
}

Poly operator_apply(const Series& f, const Poly& p) {
    require_known_through(f, p);
    const auto c = p.coeffs();
    // [x^m] sum_k c_k p^{(k)} = sum_k c_k (m+k)!/m! p_{m+k}
    std::vector<ExactScalar> out(c.size());
    for (std::size_t m = 0; m < c.size(); ++m) {
        BigInt fall = 1;
        for (std::size_t k = 0; m + k < c.size(); ++k) {
            if (k > 0) fall *= static_cast<unsigned long>(m + k);
            if (sgn(f[k]) != 0) out[m] += f[k] * ExactScalar(fall) * c[m + k];
        }
    }
    return Poly(std::move(out));
}

ShefferPair::ShefferPair(Series g, Series f)
    : g_(truncate(g, std::min(g.trunc_order(), f.trunc_order()))),
      f_(truncate(f, std::min(g.trunc_order(), f.trunc_order()))),
      fbar_(Series::zero(0)) {
    if (sgn(g_[0]) == 0) throw Error(Errc::NotInvertible, "g of a Sheffer pair must have order 0");
    fbar_ = comp_inverse(f_);
}

ShefferPair::ShefferPair(Series g, Series f, Series fbar)
    : g_(std::move(g)), f_(std::move(f)), fbar_(std::move(fbar)) {}

ShefferPair ShefferPair::truncated(std::size_t trunc_order) const {
    const std::size_t n = std::min(trunc_order, this->trunc_order());
    return ShefferPair(truncate(g_, n), truncate(f_, n), truncate(fbar_, n));
}

std::vector<Poly> sheffer_sequence(const ShefferPair& pair, std::size_t n_max) {
    require_order(pair, n_max);
    const Series fbar = truncate(pair.fbar(), n_max);
    const Series a = reciprocal(compose(truncate(pair.g(), n_max), fbar));
    // S_n(y) = n! sum_j [t^n](A fbar^j) y^j / j!
    std::vector<std::vector<ExactScalar>> coeffs(n_max + 1, std::vector<ExactScalar>(n_max + 1));
    Series term = a;
    for (std::size_t j = 0; j <= n_max; ++j) {
        if (j > 0) term = mul(term, fbar);
        const ExactScalar jf(factorial(j));
        for (std::size_t n = j; n <= n_max; ++n) {
            if (sgn(term[n]) != 0) coeffs[n][j] = ExactScalar(factorial(n)) * term[n] / jf;
        }
    }
    std::vector<Poly> out;
    out.reserve(n_max + 1);
    for (auto& c : coeffs) out.emplace_back(std::move(c));
    return out;
}

Poly sheffer_poly(const ShefferPair& pair, std::size_t n) {
    require_order(pair, n);
    return std::move(sheffer_sequence(pair, n).back());
}

ConnectionMatrix::ConnectionMatrix(std::vector<std::vector<ExactScalar>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw Error(Errc::InvalidArgument, "connection matrix needs at least one row");
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1) {
            throw Error(Errc::InvalidArgument, "row " + std::to_string(n) + " must have " + std::to_string(n + 1) +
                                                   " entries");
        }
    }
}

ConnectionMatrix ConnectionMatrix::identity(std::size_t n_max) {
    std::vector<std::vector<ExactScalar>> rows(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        rows[n].resize(n + 1);
        rows[n][n] = 1;
    }
    return ConnectionMatrix(std::move(rows));
}

ConnectionMatrix connection_coeffs(const ShefferPair& source, const ShefferPair& target, std::size_t n_max) {
    require_order(source, n_max);
    require_order(target, n_max);
    const Series fbar = truncate(source.fbar(), n_max);
    const Series ratio =
        mul(compose(truncate(target.g(), n_max), fbar), reciprocal(compose(truncate(source.g(), n_max), fbar)));
    const Series l_of_fbar = compose(truncate(target.f(), n_max), fbar);

    std::vector<std::vector<ExactScalar>> rows(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) rows[n].resize(n + 1);
    Series term = ratio;
    for (std::size_t k = 0; k <= n_max; ++k) {
        if (k > 0) term = mul(term, l_of_fbar);
        const ExactScalar kf(factorial(k));
        for (std::size_t n = k; n <= n_max; ++n) {
            if (sgn(term[n]) != 0) rows[n][k] = ExactScalar(factorial(n)) * term[n] / kf;
        }
    }
    return ConnectionMatrix(std::move(rows));
}

ConnectionMatrix connection_oracle(const ShefferPair& source, const ShefferPair& target, std::size_t n_max) {
    const std::vector<Poly> s = sheffer_sequence(source, n_max);
    const std::vector<Poly> r = sheffer_sequence(target, n_max);
    for (std::size_t k = 0; k <= n_max; ++k) {
        if (r[k].degree() != static_cast<long>(k)) {
            throw Error(Errc::SingularBasis, "target member " + std::to_string(k) + " has degree " +
                                                 std::to_string(r[k].degree()));
        }
    }
    std::vector<std::vector<ExactScalar>> rows(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        rows[n].resize(n + 1);
        if (s[n].degree() > static_cast<long>(n)) {
            throw Error(Errc::SingularBasis, "source member " + std::to_string(n) + " has degree " +
                                                 std::to_string(s[n].degree()));
        }
        Poly rest = s[n];
        for (std::size_t k = n + 1; k-- > 0;) {
            const ExactScalar c = rest.coeff(k) / r[k].coeff(k);
            rows[n][k] = c;
            if (sgn(c) != 0) rest = sub(rest, scale(r[k], c));
        }
        if (!rest.is_zero()) {
            throw Error(Errc::SingularBasis, "row " + std::to_string(n) + " left a nonzero remainder");
        }
    }
    return ConnectionMatrix(std::move(rows));
}

ConnectionMatrix chain(const ConnectionMatrix& a_to_b, const ConnectionMatrix& b_to_c) {
    const std::size_t n_max = std::min(a_to_b.n_max(), b_to_c.n_max());
    std::vector<std::vector<ExactScalar>> rows(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        rows[n].resize(n + 1);
        for (std::size_t m = 0; m <= n; ++m) {
            for (std::size_t k = m; k <= n; ++k) rows[n][m] += a_to_b.at(n, k) * b_to_c.at(k, m);
        }
    }
    return ConnectionMatrix(std::move(rows));
}

}  // namespace umbra

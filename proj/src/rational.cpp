#include "umbra/rational.hpp"

#include "umbra/error.hpp"

#include <cctype>

namespace umbra {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::CompositionOrder: return "CompositionOrder";
    case Errc::NotDelta: return "NotDelta";
    case Errc::ExpConstantTerm: return "ExpConstantTerm";
    case Errc::TruncationTooShort: return "TruncationTooShort";
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::LambdaIsOne: return "LambdaIsOne";
    case Errc::RegimeViolation: return "RegimeViolation";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

ExactScalar ratio(long num, long den) {
    if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
    ExactScalar q{BigInt(num), BigInt(den)};
    q.canonicalize();
    return q;
}

std::string to_string(const ExactScalar& q) { return q.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

ExactScalar parse_exact(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(Errc::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) {
        throw Error(Errc::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    ExactScalar q(n, d);
    q.canonicalize();
    return q;
}

bool is_canonical(const ExactScalar& q) {
    if (sgn(q.get_den()) <= 0) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

BigInt factorial(std::size_t n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

ExactScalar power(const ExactScalar& base, std::size_t exp) {
    ExactScalar out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    out.canonicalize();
    return out;
}

}  // namespace umbra

#include "umbra/families.hpp"

#include "umbra/error.hpp"

#include <algorithm>
#include <charconv>

namespace umbra {

void FamilySpec::validate() const {
    if (kind == FamilyKind::FrobeniusEuler && lambda == 1) {
        throw Error(Errc::LambdaIsOne, "Frobenius-Euler polynomials are undefined at lambda = 1");
    }
}

std::string FamilySpec::label() const {
    switch (kind) {
    case FamilyKind::Hermite: return "hermite";
    case FamilyKind::Bernoulli: return "bernoulli:" + std::to_string(order_r);
    case FamilyKind::Euler: return "euler:" + std::to_string(order_r);
    case FamilyKind::FrobeniusEuler:
        return "frobenius-euler:" + std::to_string(order_r) + ":" + to_string(lambda);
    }
    return "unknown";
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

unsigned parse_order(const std::string& text) {
    unsigned value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw Error(Errc::InvalidArgument, "order must be a nonnegative integer, got '" + text + "'");
    }
    return value;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
    const auto parts = split(text, ':');
    const std::string& name = parts[0];
    FamilySpec spec;
    if (name == "hermite") {
        if (parts.size() > 1) throw Error(Errc::InvalidArgument, "hermite takes no parameters");
        return FamilySpec::hermite();
    }
    if (name == "bernoulli" || name == "euler") {
        if (parts.size() > 2) throw Error(Errc::InvalidArgument, "too many parameters in '" + text + "'");
        const unsigned r = parts.size() == 2 ? parse_order(parts[1]) : 1U;
        return name == "bernoulli" ? FamilySpec::bernoulli(r) : FamilySpec::euler(r);
    }
    if (name == "frobenius-euler" || name == "fe") {
        if (parts.size() != 3) {
            throw Error(Errc::InvalidArgument, "expected frobenius-euler:<order>:<lambda>, got '" + text + "'");
        }
        spec = FamilySpec::frobenius_euler(parse_order(parts[1]), parse_exact(parts[2]));
        spec.validate();
        return spec;
    }
    throw Error(Errc::InvalidArgument, "unknown family '" + name + "'");
}

Series exp_minus_one_over_t(std::size_t trunc_order) {
    const Series e = Series::exp_linear(1, trunc_order + 1);
    return shift_down(sub(e, Series::constant(1, trunc_order + 1)), 1);
}

ShefferPair sheffer_pair_of(const FamilySpec& spec, std::size_t n_max) {
    spec.validate();
    const std::size_t n = std::max<std::size_t>(n_max, 1);
    switch (spec.kind) {
    case FamilyKind::Hermite:
        return ShefferPair(exp_series(Series::monomial(2, n, ratio(1, 4))),
                           Series::monomial(1, n, ratio(1, 2)));
    case FamilyKind::Bernoulli:
        return ShefferPair(pow_int(exp_minus_one_over_t(n), spec.order_r), Series::identity(n));
    case FamilyKind::Euler: {
        const Series base = scale(Series::exp_linear(1, n) + Series::constant(1, n), ratio(1, 2));
        return ShefferPair(pow_int(base, spec.order_r), Series::identity(n));
    }
    case FamilyKind::FrobeniusEuler: {
        const ExactScalar denom = 1 - spec.lambda;
        const Series base = scale(Series::exp_linear(1, n) - Series::constant(spec.lambda, n), 1 / denom);
        return ShefferPair(pow_int(base, spec.order_r), Series::identity(n));
    }
    }
    throw Error(Errc::InvalidArgument, "unknown family kind");
}

std::vector<Poly> family_polys(const FamilySpec& spec, std::size_t n_max) {
    return sheffer_sequence(sheffer_pair_of(spec, n_max), n_max);
}

Poly family_poly(const FamilySpec& spec, std::size_t n) { return std::move(family_polys(spec, n).back()); }

std::vector<ExactScalar> family_numbers(const FamilySpec& spec, std::size_t n_max) {
    const auto polys = family_polys(spec, n_max);
    std::vector<ExactScalar> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.coeff(0));
    return out;
}

ExactScalar family_number(const FamilySpec& spec, std::size_t n) { return family_poly(spec, n).coeff(0); }

Poly hermite_by_operator(std::size_t n) {
    const Series op = exp_series(Series::monomial(2, std::max<std::size_t>(n, 2), ratio(-1, 4)));
    return operator_apply(op, Poly::monomial(n, power(2, n)));
}

}  // namespace umbra

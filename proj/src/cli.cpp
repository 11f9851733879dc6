#include "umbra/cli.hpp"

#include "umbra/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

namespace umbra::cli {

namespace {

Document tool_block() {
    Document tool;
    tool["name"] = kToolName;
    tool["version"] = kToolVersion;
    return tool;
}

Document conventions_block() {
    Document c;
    c["coefficients"] = "row n lists entries for indices 0..n in ascending order";
    c["scalars"] = "exact rationals written p/q or p, lowest terms, positive denominator";
    c["series"] = "ordinary coefficients; pairing <t^k|x^n> = n! delta(n,k)";
    c["stirling1"] = "signed, coefficient of x^l in (x)_n";
    c["zero_power"] = "0^0 = 1";
    c["hermite"] = "physicists' convention, exp(2xt - t^2)";
    return c;
}

Document family_block(const FamilySpec& spec) {
    Document f;
    f["label"] = spec.label();
    switch (spec.kind) {
    case FamilyKind::Hermite: f["name"] = "hermite"; break;
    case FamilyKind::Bernoulli: f["name"] = "bernoulli"; break;
    case FamilyKind::Euler: f["name"] = "euler"; break;
    case FamilyKind::FrobeniusEuler: f["name"] = "frobenius-euler"; break;
    }
    if (spec.kind == FamilyKind::Hermite) {
        f["order"] = nullptr;
    } else {
        f["order"] = spec.order_r;
    }
    if (spec.kind == FamilyKind::FrobeniusEuler) {
        f["lambda"] = to_string(spec.lambda);
    } else {
        f["lambda"] = nullptr;
    }
    return f;
}

Document row_entry(std::size_t n, std::span<const ExactScalar> values) {
    Document row;
    row["n"] = n;
    Document coeffs = Document::array();
    for (const auto& v : values) coeffs.push_back(to_string(v));
    row["coefficients"] = std::move(coeffs);
    return row;
}

std::vector<ExactScalar> padded(const Poly& p, std::size_t n) {
    std::vector<ExactScalar> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = p.coeff(i);
    return v;
}

}  // namespace

Document family_document(const FamilySpec& spec, std::size_t max_degree) {
    const auto polys = family_polys(spec, max_degree);
    Document doc;
    doc["tool"] = tool_block();
    doc["command"] = "family";
    doc["family"] = family_block(spec);
    doc["max_degree"] = max_degree;
    doc["conventions"] = conventions_block();
    Document rows = Document::array();
    for (std::size_t n = 0; n <= max_degree; ++n) rows.push_back(row_entry(n, padded(polys[n], n)));
    doc["rows"] = std::move(rows);
    return doc;
}

std::string family_csv(const FamilySpec& spec, std::size_t max_degree) {
    const auto polys = family_polys(spec, max_degree);
    std::ostringstream os;
    os << "n,power,coefficient\n";
    for (std::size_t n = 0; n <= max_degree; ++n) {
        for (std::size_t i = 0; i <= n; ++i) os << n << ',' << i << ',' << to_string(polys[n].coeff(i)) << '\n';
    }
    return os.str();
}

ConnectOutcome connect_routes(const FamilySpec& source, const FamilySpec& target, std::size_t max_n) {
    const ShefferPair s = sheffer_pair_of(source, max_n);
    const ShefferPair t = sheffer_pair_of(target, max_n);
    return {connection_coeffs(s, t, max_n), connection_oracle(s, t, max_n)};
}

Document connect_document(const FamilySpec& source, const FamilySpec& target, const ConnectOutcome& outcome) {
    Document doc;
    doc["tool"] = tool_block();
    doc["command"] = "connect";
    doc["source"] = family_block(source);
    doc["target"] = family_block(target);
    doc["max_n"] = outcome.transfer.n_max();
    Document routes;
    routes["computed_by"] = Document::array({"transfer_formula", "triangular_solve"});
    routes["agree"] = outcome.agree();
    doc["routes"] = std::move(routes);
    doc["conventions"] = conventions_block();
    Document rows = Document::array();
    for (std::size_t n = 0; n <= outcome.transfer.n_max(); ++n) rows.push_back(row_entry(n, outcome.transfer.row(n)));
    doc["rows"] = std::move(rows);
    return doc;
}

std::string connect_csv(const ConnectOutcome& outcome) {
    std::ostringstream os;
    os << "n,k,coefficient\n";
    for (std::size_t n = 0; n <= outcome.transfer.n_max(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) os << n << ',' << k << ',' << to_string(outcome.transfer.at(n, k)) << '\n';
    }
    return os.str();
}

std::vector<VerifyCell> plan_cells(const VerifyRequest& request) {
    const std::vector<ExactScalar> base_lambdas =
        request.lambdas.empty() ? lambda_samples(3) : lambda_samples(request.lambdas.size(), request.lambdas);
    std::vector<VerifyCell> cells;
    for (TheoremId id : request.theorems) {
        std::vector<unsigned> orders = request.orders;
        if (id == TheoremId::T6 && (request.all_theorems || !request.orders_given)) {
            orders = {static_cast<unsigned>(request.max_n + 1)};
        }
        if (id == TheoremId::T7 && request.all_theorems) {
            std::erase_if(orders, [&](unsigned r) { return r > request.max_n; });
        }
        for (unsigned r : orders) {
            if (!needs_lambda(id)) {
                cells.push_back({id, request.max_n, r, std::nullopt});
                continue;
            }
            const std::vector<ExactScalar> lambdas =
                request.symbolic_lambda
                    ? lambda_samples(std::max(symbolic_sample_count(request.max_n, r), base_lambdas.size()),
                                     base_lambdas)
                    : base_lambdas;
            for (const auto& lam : lambdas) cells.push_back({id, request.max_n, r, lam});
        }
    }
    for (const auto& cell : cells) validate_cell(cell);
    return cells;
}

Document verify_document(const VerifyRequest& request, std::span<const IdentityReport> reports) {
    Document doc;
    doc["tool"] = tool_block();
    doc["command"] = "verify";
    doc["max_n"] = request.max_n;
    doc["symbolic_lambda"] = request.symbolic_lambda;
    doc["conventions"] = conventions_block();
    Document list = Document::array();
    std::size_t passed = 0;
    for (const auto& rep : reports) {
        Document item;
        item["theorem"] = to_string(rep.theorem);
        item["n_max"] = rep.n_max;
        item["r"] = rep.r;
        if (rep.lambda) {
            item["lambda"] = to_string(*rep.lambda);
        } else {
            item["lambda"] = nullptr;
        }
        item["status"] = rep.status == Status::Pass ? "pass" : "fail";
        item["degrees_checked"] = rep.degrees_checked;
        item["degrees_skipped"] = rep.degrees_skipped;
        if (rep.first_failure) {
            Document f;
            f["n"] = rep.first_failure->n;
            f["power"] = rep.first_failure->power;
            f["expected"] = to_string(rep.first_failure->expected);
            f["got"] = to_string(rep.first_failure->got);
            item["first_failure"] = std::move(f);
        } else {
            item["first_failure"] = nullptr;
        }
        if (rep.status == Status::Pass) ++passed;
        list.push_back(std::move(item));
    }
    doc["reports"] = std::move(list);
    Document summary;
    summary["cells"] = reports.size();
    summary["passed"] = passed;
    summary["failed"] = reports.size() - passed;
    doc["summary"] = std::move(summary);
    return doc;
}

std::string verify_csv(std::span<const IdentityReport> reports) {
    std::ostringstream os;
    os << "theorem,n_max,r,lambda,status,degrees_checked,degrees_skipped,fail_n,fail_power,expected,got\n";
    for (const auto& rep : reports) {
        os << to_string(rep.theorem) << ',' << rep.n_max << ',' << rep.r << ','
           << (rep.lambda ? to_string(*rep.lambda) : std::string()) << ','
           << (rep.status == Status::Pass ? "pass" : "fail") << ',' << rep.degrees_checked << ','
           << rep.degrees_skipped << ',';
        if (rep.first_failure) {
            os << rep.first_failure->n << ',' << rep.first_failure->power << ','
               << to_string(rep.first_failure->expected) << ',' << to_string(rep.first_failure->got);
        } else {
            os << ",,,";
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::vector<ExactScalar>> parse_rows(const Document& doc) {
    if (!doc.contains("rows") || !doc["rows"].is_array()) {
        throw Error(Errc::InvalidArgument, "document has no rows array");
    }
    std::vector<std::vector<ExactScalar>> rows;
    for (const auto& row : doc["rows"]) {
        if (!row.contains("coefficients") || !row["coefficients"].is_array()) {
            throw Error(Errc::InvalidArgument, "row without a coefficients array");
        }
        std::vector<ExactScalar> values;
        for (const auto& c : row["coefficients"]) {
            if (!c.is_string()) throw Error(Errc::InvalidArgument, "coefficient is not a string");
            values.push_back(parse_exact(c.get<std::string>()));
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

unsigned thread_budget() {
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("UMBRA_THREADS")) {
        const std::string_view text(env);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
    }
    return hw;
}

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

unsigned parse_unsigned(const std::string& text) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(Errc::InvalidArgument, "expected a nonnegative integer, got '" + text + "'");
    }
    return value;
}

std::vector<ExactScalar> parse_lambdas(const std::vector<std::string>& items) {
    std::vector<ExactScalar> out;
    for (const auto& item : items) {
        for (const auto& part : split_list(item)) out.push_back(parse_exact(part));
    }
    return out;
}

void emit(std::ostream& out, const Document& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact umbral-calculus tables and identity checks for Hermite, Bernoulli, Euler and "
                 "Frobenius-Euler polynomials",
                 std::string(kToolName)};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string format = "json";
    const auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* family = app.add_subcommand("family", "Coefficient rows of one polynomial family");
    std::string family_name;
    unsigned family_order = 1;
    std::vector<std::string> family_lambda;
    std::size_t max_degree = 8;
    family->add_option("--name", family_name, "hermite, bernoulli, euler or frobenius-euler")->required();
    family->add_option("--order", family_order, "Order r (ignored for hermite)");
    family->add_option("--lambda", family_lambda, "Frobenius-Euler parameter p/q, must not be 1")->allow_extra_args(false);
    family->add_option("--max-degree", max_degree, "Largest n emitted");
    add_format(family);

    auto* connect = app.add_subcommand("connect", "Connection coefficients between two families");
    std::string from_text;
    std::string to_text;
    std::size_t connect_max_n = 8;
    connect->add_option("--from", from_text, "Source family, e.g. euler:1")->required();
    connect->add_option("--to", to_text, "Target family, e.g. hermite or frobenius-euler:2:1/2")->required();
    connect->add_option("--max-n", connect_max_n, "Largest n emitted");
    add_format(connect);

    auto* verify = app.add_subcommand("verify", "Check the connection identities exactly over a grid");
    std::string theorem_text = "all";
    std::string orders_text;
    std::vector<std::string> verify_lambda;
    VerifyRequest request;
    verify->add_option("--theorems", theorem_text, "Comma list of t1..t8, remark, or all");
    verify->add_option("--max-n", request.max_n, "Largest n checked");
    verify->add_option("--orders", orders_text, "Comma list of orders r (default 0,1,2,3)");
    verify->add_option("--lambda", verify_lambda, "Comma list of lambda samples (default -1,2,1/2)")
        ->allow_extra_args(false);
    verify->add_flag("--symbolic-lambda", request.symbolic_lambda,
                     "Extend lambda samples to n + r + 1 distinct values per order");
    add_format(verify);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (family->parsed()) {
            FamilySpec spec;
            if (family_name == "hermite") {
                spec = FamilySpec::hermite();
            } else if (family_name == "bernoulli") {
                spec = FamilySpec::bernoulli(family_order);
            } else if (family_name == "euler") {
                spec = FamilySpec::euler(family_order);
            } else if (family_name == "frobenius-euler") {
                if (family_lambda.size() != 1) {
                    err << "frobenius-euler needs exactly one --lambda\n";
                    return kUsage;
                }
                spec = FamilySpec::frobenius_euler(family_order, parse_exact(family_lambda.front()));
            } else {
                err << "unknown family '" << family_name << "'\n";
                return kUsage;
            }
            if (spec.kind != FamilyKind::FrobeniusEuler && !family_lambda.empty()) {
                err << "--lambda only applies to frobenius-euler\n";
                return kUsage;
            }
            spec.validate();
            if (format == "csv") {
                out << family_csv(spec, max_degree);
            } else {
                emit(out, family_document(spec, max_degree));
            }
            return kOk;
        }

        if (connect->parsed()) {
            const FamilySpec source = parse_family(from_text);
            const FamilySpec target = parse_family(to_text);
            const ConnectOutcome outcome = connect_routes(source, target, connect_max_n);
            if (format == "csv") {
                out << connect_csv(outcome);
            } else {
                emit(out, connect_document(source, target, outcome));
            }
            if (!outcome.agree()) {
                err << "transfer formula and triangular solve disagree\n";
                return kInconsistent;
            }
            return kOk;
        }

        // verify
        for (const auto& item : split_list(theorem_text)) {
            if (item == "all") {
                request.all_theorems = true;
                request.theorems.assign(all_theorems().begin(), all_theorems().end());
                continue;
            }
            const auto id = parse_theorem(item);
            if (!id) {
                err << "unknown theorem '" << item << "'\n";
                return kUsage;
            }
            if (std::find(request.theorems.begin(), request.theorems.end(), *id) == request.theorems.end()) {
                request.theorems.push_back(*id);
            }
        }
        if (request.theorems.empty()) {
            err << "no theorems selected\n";
            return kUsage;
        }
        if (!orders_text.empty()) {
            request.orders.clear();
            for (const auto& item : split_list(orders_text)) request.orders.push_back(parse_unsigned(item));
            std::sort(request.orders.begin(), request.orders.end());
            request.orders.erase(std::unique(request.orders.begin(), request.orders.end()), request.orders.end());
            request.orders_given = true;
        }
        request.lambdas = parse_lambdas(verify_lambda);
        for (const auto& lam : request.lambdas) {
            if (lam == 1) throw Error(Errc::LambdaIsOne, "lambda = 1 is excluded");
        }
        const auto cells = plan_cells(request);
        const auto reports = verify_cells(cells, thread_budget());
        if (format == "csv") {
            out << verify_csv(reports);
        } else {
            emit(out, verify_document(request, reports));
        }
        const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                          [](const IdentityReport& r) { return r.status == Status::Pass; });
        return all_pass ? kOk : kIdentityFailure;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace umbra::cli

#pragma once

#include "umbra/families.hpp"
#include "umbra/identities.hpp"
#include "umbra/umbral.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace umbra::cli {

inline constexpr std::string_view kToolName = "umbra";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Process exit codes. Part of the public interface.
enum ExitCode : int {
    kOk = 0,
    kIdentityFailure = 1,
    kUsage = 2,
    kInconsistent = 3,
};

using Document = nlohmann::ordered_json;

Document family_document(const FamilySpec& spec, std::size_t max_degree);
std::string family_csv(const FamilySpec& spec, std::size_t max_degree);

struct ConnectOutcome {
    ConnectionMatrix transfer;   // transfer-formula route
    ConnectionMatrix oracle;     // triangular-solve route
    bool agree() const { return transfer == oracle; }
};

ConnectOutcome connect_routes(const FamilySpec& source, const FamilySpec& target, std::size_t max_n);
Document connect_document(const FamilySpec& source, const FamilySpec& target, const ConnectOutcome& outcome);
std::string connect_csv(const ConnectOutcome& outcome);

struct VerifyRequest {
    std::vector<TheoremId> theorems;
    bool all_theorems = false;      // T6 then uses r = max_n + 1; T7 drops orders above max_n
    std::size_t max_n = 8;
    std::vector<unsigned> orders = {0, 1, 2, 3};
    bool orders_given = false;
    std::vector<ExactScalar> lambdas;  // empty: -1, 2, 1/2
    bool symbolic_lambda = false;
};

/// Expands a request into its grid, ordered by theorem, then r, then lambda.
/// Throws Error for cells outside a theorem's hypotheses.
std::vector<VerifyCell> plan_cells(const VerifyRequest& request);

Document verify_document(const VerifyRequest& request, std::span<const IdentityReport> reports);
std::string verify_csv(std::span<const IdentityReport> reports);

/// The "rows" array of a family or connect document, parsed back to exact
/// values. Throws Error{InvalidArgument} on malformed input.
std::vector<std::vector<ExactScalar>> parse_rows(const Document& doc);

/// Worker count from UMBRA_THREADS, else the hardware concurrency.
unsigned thread_budget();

/// Runs the tool on `args` (without the program name). Documents go to
/// `out`, diagnostics to `err`. Returns an ExitCode.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace umbra::cli

#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/multivariate.hpp"

namespace pmahler {

using Json = nlohmann::ordered_json;

enum class Provenance { paper, derived };

struct Reduction {
  std::string label;
  std::optional<std::vector<long>> exponents;
  std::optional<LaurentPolynomial> printed;
  /// Use the printed polynomial even when it disagrees with the substitution.
  bool prefer_printed = false;
};

struct Claim {
  std::string id;
  std::string kind;
  std::string target;  // "A" or a reduction label
  Provenance provenance = Provenance::derived;
  std::optional<std::string> skip;
  std::vector<std::string> annotations;
  Json fields;  // the full claim object, including kind-specific fields
};

struct LinkRecord {
  std::string name;
  unsigned components = 1;
  std::string cover;  // "TLN" or "custom"
  std::vector<std::string> variables;
  std::optional<MultivariatePolynomial> delta;
  std::vector<Reduction> reductions;
  std::string alexander_from;
  std::vector<Claim> claims;
  std::vector<std::string> annotations;

  /// The one-variable polynomial a reduction stands for.
  LaurentPolynomial reduced(const std::string& label) const;
  /// A_L = (t - 1) * reduced(alexander_from) for links, reduced(...) for knots.
  LaurentPolynomial alexander() const;
  /// reduced(label), or alexander() for "A".
  LaurentPolynomial target(const std::string& label) const;
};

inline constexpr int kCorpusSchemaVersion = 1;

/// Reads and validates a corpus file. Throws CorpusError naming the record.
std::vector<LinkRecord> load_corpus(const std::string& path);
std::vector<LinkRecord> parse_corpus(const Json& document);

enum class ClaimStatus { pass, fail, skipped };

std::string to_string(ClaimStatus status);

struct ClaimResult {
  std::string id;
  std::string kind;
  std::string target;
  Provenance provenance = Provenance::derived;
  ClaimStatus status = ClaimStatus::skipped;
  Json expected;
  Json computed;
  std::string tolerance;  // "exact", "abs 1e-09", "2-adic digits 30", ...
  std::string detail;
  std::vector<std::string> annotations;
};

struct RecordResult {
  std::string name;
  std::vector<ClaimResult> claims;
  double milliseconds = 0;
};

struct VerificationReport {
  std::vector<RecordResult> records;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t paper_failures = 0;

  /// Only PAPER-tagged failures make the corpus fail.
  bool ok() const { return paper_failures == 0; }
  Json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

struct VerifyOptions {
  /// Absolute tolerance for archimedean values.
  double tolerance = 1e-9;
  /// Restrict to claims of these kinds (empty = all).
  std::vector<std::string> kinds;
  bool parallel = true;
};

VerificationReport verify_corpus(const std::vector<LinkRecord>& records,
                                 const VerifyOptions& options = {});

/// Verifies one claim of one record.
ClaimResult verify_claim(const LinkRecord& record, const Claim& claim, const VerifyOptions& options);

/// Evaluates closed-form strings such as "log((3+sqrt(5))/2)" with + - * /,
/// ^, parentheses, log and sqrt. Throws ParseError.
double evaluate_closed_form(const std::string& text);

}  // namespace pmahler

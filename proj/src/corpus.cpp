#include "pmahler/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

#include "pmahler/entropy.hpp"
#include "pmahler/errors.hpp"
#include "pmahler/homology.hpp"
#include "pmahler/iwasawa.hpp"
#include "pmahler/mahler.hpp"
#include "pmahler/parser.hpp"
#include "pmahler/pure.hpp"

namespace pmahler {

namespace {

// ---------------------------------------------------------------------------
// Closed-form evaluation

class ClosedFormParser {
 public:
  explicit ClosedFormParser(const std::string& text) : text_(text) {}

  double parse() {
    const double v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else return v;
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    const double base = atom();
    if (accept('^')) return std::pow(base, unary());
    return base;
  }

  double atom() {
    skip_space();
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      std::size_t used = 0;
      const double v = std::stod(text_.substr(pos_), &used);
      pos_ += used;
      return v;
    }
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      name += text_[pos_++];
    }
    if (name.empty()) fail("expected a number, function or '('");
    if (name == "pi") return std::acos(-1.0);
    if (!accept('(')) fail("expected '(' after " + name);
    const double arg = expr();
    if (!accept(')')) fail("expected ')'");
    if (name == "log") return std::log(arg);
    if (name == "sqrt") return std::sqrt(arg);
    fail("unknown function " + name);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Corpus parsing

[[noreturn]] void corpus_fail(const std::string& record, const std::string& what) {
  throw CorpusError("corpus record " + record + ": " + what);
}

Provenance parse_provenance(const std::string& record, const std::string& text) {
  if (text == "PAPER") return Provenance::paper;
  if (text == "DERIVED") return Provenance::derived;
  corpus_fail(record, "provenance must be PAPER or DERIVED, got " + text);
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  std::vector<std::string> out;
  if (j.contains(key)) {
    for (const auto& s : j.at(key)) out.push_back(s.get<std::string>());
  }
  return out;
}

std::string provenance_name(Provenance p) { return p == Provenance::paper ? "PAPER" : "DERIVED"; }

// ---------------------------------------------------------------------------
// Claim checks

Rational parse_rational(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

// log_p(a + b sqrt(D)) with the square root fixed by its residue.
PadicNumber expected_padic_log(const Json& e, Prime p, long N) {
  const Integer a(e.at("a").get<long>());
  const Integer b(e.at("b").get<long>());
  const long working = N + 8;
  Integer x = a;
  if (b != 0) {
    const long D = e.at("radicand").get<long>();
    const long mod = e.at("root_mod").get<long>();
    long k = 0;
    for (long m = mod; m > 1; m /= static_cast<long>(p)) {
      if (m % static_cast<long>(p) != 0) throw CorpusError("root_mod must be a power of p");
      ++k;
    }
    LaurentPolynomial::Terms terms{{0, Rational(-D)}, {2, Rational(1)}};
    const PadicNumber r = hensel_lift(LaurentPolynomial(std::move(terms)), p,
                                      Integer(e.at("root_residue").get<long>()), k, working);
    x = a + b * r.residue(working);
  }
  return padic_log(PadicNumber::from_residue(x, p, working));
}

Json padic_json(const PadicNumber& x) {
  Json j;
  j["digits"] = x.digits();
  j["certified_digits"] = x.absolute_precision();
  return j;
}

struct Check {
  bool ok = false;
  Json computed;
  std::string tolerance = "exact";
  std::string detail;
};

Check check_claim(const LinkRecord& record, const Claim& claim, const VerifyOptions& options) {
  const Json& s = claim.fields;
  const std::string& kind = claim.kind;
  Check c;
  auto target = [&]() { return record.target(claim.target); };
  auto prime = [&]() { return static_cast<Prime>(s.at("prime").get<long>()); };
  const double tol = options.tolerance;

  if (kind == "reduction") {
    const auto it = std::find_if(record.reductions.begin(), record.reductions.end(),
                                 [&](const Reduction& r) { return r.label == claim.target; });
    if (it == record.reductions.end() || !it->exponents || !record.delta) {
      throw CorpusError("reduction claim needs delta and exponents");
    }
    const LaurentPolynomial computed = substitute_onevar(*record.delta, *it->exponents);
    const LaurentPolynomial expected =
        s.contains("expected") ? parse_laurent(s.at("expected").get<std::string>()) : *it->printed;
    c.computed = computed.to_string();
    c.ok = normalize(computed) == normalize(expected);
    c.tolerance = "exact up to units +-t^k";
  } else if (kind == "mu") {
    const long mu = mu_invariant(target(), prime());
    c.computed = mu;
    c.ok = mu == s.at("expected").get<long>();
  } else if (kind == "mahler_p") {
    const LogMeasure m = mahler_padic(target(), prime());
    c.computed = to_string(m.log_p_coefficient) + " log " + std::to_string(prime());
    c.ok = m.log_p_coefficient == parse_rational(s.at("expected").get<std::string>());
  } else if (kind == "mahler_inf") {
    const LogMeasure m = mahler_euclidean(target(), 1e-12);
    const double expected = evaluate_closed_form(s.at("expected").get<std::string>());
    c.computed = m.value;
    c.ok = std::abs(m.value - expected) <= tol;
    c.tolerance = "abs " + Json(tol).dump();
  } else if (kind == "entropy") {
    const EntropyReport r = entropy_total(target(), 1e-12);
    const Json& e = s.at("expected");
    const double total = evaluate_closed_form(e.at("total").get<std::string>());
    const double h_inf = evaluate_closed_form(e.at("h_inf").get<std::string>());
    Json finite = Json::object();
    for (const LogMeasure& h : r.h_finite) finite[std::to_string(h.place)] = to_string(h.log_p_coefficient);
    c.computed = {{"total", r.total}, {"h_inf", r.h_inf.value}, {"h_finite", finite}};
    bool finite_ok = finite.size() == e.at("h_finite").size();
    for (const auto& [p, coefficient] : e.at("h_finite").items()) {
      finite_ok = finite_ok && finite.contains(p) &&
                  parse_rational(finite.at(p).get<std::string>()) ==
                      parse_rational(coefficient.get<std::string>());
    }
    c.ok = finite_ok && std::abs(r.total - total) <= tol && std::abs(r.h_inf.value - h_inf) <= tol &&
           r.total_matches && r.roots_match;
    c.tolerance = "finite exact; inf abs " + Json(tol).dump();
  } else if (kind == "balance") {
    const BalanceReport b = balance_check(target(), prime());
    c.computed = Json::array({b.lead_valuation, to_string(b.entropy), b.mu});
    const Json& e = s.at("expected");
    c.ok = b.holds && b.lead_valuation == e.at(0).get<long>() &&
           b.entropy == Rational(e.at(1).get<long>()) && b.mu == e.at(2).get<long>();
    c.detail = "(-log|a_0|_p, h_p, mu_p log p) in units of log p";
  } else if (kind == "leading_coeff_identity") {
    const LeadingCoefficientReport r = leading_coeff_identity(target());
    c.computed = r.holds;
    c.ok = r.holds == s.at("expected").get<bool>();
  } else if (kind == "homology") {
    const HomologyOrder h =
        homology_order(target(), s.at("n").get<unsigned long>(), record.components);
    c.computed = {{"order", h.order.get_str()}, {"caveat", h.caveat}};
    c.ok = h.order == Integer(s.at("expected").get<std::string>()) &&
           h.caveat == s.at("caveat").get<bool>();
  } else if (kind == "growth") {
    const Json& place = s.at("place");
    const auto n_max = s.at("n_max").get<unsigned long>();
    if (place.is_string()) {
      const ConvergenceReport r = resultant_limit_estimate(target(), kInfinity, n_max);
      const double expected = evaluate_closed_form(s.at("expected").get<std::string>());
      const double root = std::exp(r.samples.back().estimate);
      const double rel = std::abs(root - expected) / expected;
      const double allowed = s.at("relative_tolerance").get<double>();
      c.computed = {{"n", r.samples.back().n}, {"root", root}, {"relative_error", rel},
                    {"error_shrinking", r.error_shrinking}};
      c.ok = rel < allowed && r.error_shrinking;
      c.tolerance = "relative " + Json(allowed).dump();
    } else {
      const ConvergenceReport r =
          resultant_limit_estimate(target(), place.get<Prime>(), n_max, false);
      c.computed = r.exact_limit ? Json(to_string(*r.exact_limit)) : Json(r.limit);
      c.ok = r.exact_limit && *r.exact_limit == parse_rational(s.at("expected").get<std::string>());
      c.detail = "exact limit of -v_p(R(A, nu_n))/n from an affine tail";
    }
  } else if (kind == "iwasawa") {
    const IwasawaInvariants inv = fit_invariants(target(), prime(), s.at("r_max").get<long>());
    const Json& e = s.at("expected");
    c.computed = {{"lambda", inv.lambda}, {"mu", inv.mu}, {"nu", *inv.nu}, {"r0", inv.r0}};
    c.ok = inv.lambda == e.at("lambda").get<long>() && inv.mu == e.at("mu").get<long>() &&
           *inv.nu == e.at("nu").get<long>();
  } else if (kind == "iwasawa_consistency") {
    const LaurentPolynomial A = target();
    const long r_max = s.at("r_max").get<long>();
    c.ok = true;
    c.computed = Json::object();
    for (const auto& pj : s.at("primes")) {
      const auto p = pj.get<Prime>();
      if (!qhs3_check(A, p)) {
        c.computed[std::to_string(p)] = "not applicable";
        continue;
      }
      const ConsistencyReport rep = verify_consistency(A, p, r_max);
      bool exact = true;
      for (long r = rep.fitted.r0; r <= r_max; ++r) {
        exact = exact && rep.tower[static_cast<std::size_t>(r - 1)] ==
                             rep.fitted.lambda * r +
                                 rep.fitted.mu * prime_power(p, static_cast<unsigned long>(r)).get_si() +
                                 *rep.fitted.nu;
      }
      c.computed[std::to_string(p)] = {{"lambda", rep.analytic.lambda}, {"mu", rep.analytic.mu},
                                        {"nu", *rep.fitted.nu}, {"r0", rep.fitted.r0},
                                        {"consistent", rep.consistent() && exact}};
      c.ok = c.ok && rep.consistent() && exact;
    }
  } else if (kind == "mp" || kind == "hbar" || kind == "pure_link_growth") {
    const Prime p = prime();
    const long N = s.at("precision").get<long>();
    const auto budget = s.at("n_budget").get<unsigned long>();
    const PadicNumber expected = expected_padic_log(s.at("expected"), p, N);
    c.tolerance = std::to_string(p) + "-adic digits " + std::to_string(N);
    std::vector<PadicNumber> values;
    if (kind == "hbar") {
      const PurePadicResult r = hbar_p(target(), p, budget, N);
      c.computed = padic_json(r.value);
      if (r.cross_check_digits) c.computed["closed_form_agreement"] = *r.cross_check_digits;
      values.push_back(r.value);
    } else if (kind == "mp") {
      const PurePadicResult est = mp_estimator(target(), p, budget, N);
      const PurePadicResult cf = mp_closed_form(target(), p, N);
      c.computed = {{"estimator", padic_json(est.value)}, {"closed_form", padic_json(cf.value)},
                    {"closed_form_method", to_string(cf.method)}};
      values.push_back(est.value);
      values.push_back(cf.value);
    } else {
      const PurePadicResult r = pure_link_growth(target(), record.components, p, budget, N);
      c.computed = padic_json(r.value);
      values.push_back(r.value);
    }
    c.ok = true;
    for (const PadicNumber& v : values) {
      c.ok = c.ok && v.absolute_precision() >= N && v.agreement(expected) >= N;
    }
    c.detail = "expected " + expected.truncated(N).digits();
  } else {
    throw CorpusError("unknown claim kind " + kind);
  }
  return c;
}

}  // namespace

double evaluate_closed_form(const std::string& text) { return ClosedFormParser(text).parse(); }

LaurentPolynomial LinkRecord::reduced(const std::string& label) const {
  for (const Reduction& r : reductions) {
    if (r.label != label) continue;
    if (r.printed && (r.prefer_printed || !r.exponents || !delta)) return *r.printed;
    if (r.exponents && delta) return substitute_onevar(*delta, *r.exponents);
    break;
  }
  throw CorpusError("corpus record " + name + ": no usable reduction " + label);
}

LaurentPolynomial LinkRecord::alexander() const {
  const LaurentPolynomial base = reduced(alexander_from);
  if (components < 2) return base;
  return base * LaurentPolynomial::from_ascending({Integer(-1), Integer(1)});
}

LaurentPolynomial LinkRecord::target(const std::string& label) const {
  return label == "A" ? alexander() : reduced(label);
}

std::vector<LinkRecord> parse_corpus(const Json& document) {
  if (!document.is_object() || !document.contains("schema_version")) {
    throw CorpusError("corpus: missing schema_version");
  }
  if (document.at("schema_version").get<int>() != kCorpusSchemaVersion) {
    throw CorpusError("corpus: unsupported schema_version " +
                      document.at("schema_version").dump());
  }
  std::vector<LinkRecord> records;
  std::set<std::string> names;
  for (const Json& r : document.at("records")) {
    LinkRecord rec;
    rec.name = r.value("name", std::string("?"));
    try {
      if (!names.insert(rec.name).second) corpus_fail(rec.name, "duplicate name");
      rec.components = r.at("components").get<unsigned>();
      if (rec.components == 0) corpus_fail(rec.name, "components must be positive");
      rec.cover = r.value("cover", std::string("TLN"));
      rec.variables = string_list(r, "variables");
      if (rec.variables.size() != (rec.cover == "TLN" ? rec.components : rec.variables.size())) {
        corpus_fail(rec.name, "a TLN record needs one variable per component");
      }
      if (r.contains("delta")) {
        rec.delta = parse_multivariate(r.at("delta").get<std::string>(), rec.variables);
      }
      for (const Json& red : r.at("reductions")) {
        Reduction x;
        x.label = red.at("label").get<std::string>();
        if (red.contains("exponents")) {
          x.exponents = red.at("exponents").get<std::vector<long>>();
          if (x.exponents->size() != rec.variables.size()) {
            corpus_fail(rec.name, "reduction " + x.label + " has the wrong arity");
          }
        }
        if (red.contains("printed")) x.printed = parse_laurent(red.at("printed").get<std::string>());
        x.prefer_printed = red.value("use", std::string()) == "printed";
        if (!x.printed && !(x.exponents && rec.delta)) {
          corpus_fail(rec.name, "reduction " + x.label + " has neither a substitution nor a printed form");
        }
        rec.reductions.push_back(std::move(x));
      }
      rec.alexander_from = r.at("alexander_from").get<std::string>();
      rec.annotations = string_list(r, "annotations");
      std::set<std::string> ids;
      for (const Json& cj : r.at("claims")) {
        Claim c;
        c.id = cj.at("id").get<std::string>();
        if (!ids.insert(c.id).second) corpus_fail(rec.name, "duplicate claim id " + c.id);
        c.kind = cj.at("kind").get<std::string>();
        c.target = cj.value("target", std::string("A"));
        c.provenance = parse_provenance(rec.name, cj.at("provenance").get<std::string>());
        if (cj.contains("skip")) c.skip = cj.at("skip").get<std::string>();
        c.annotations = string_list(cj, "annotations");
        c.fields = cj;
        rec.claims.push_back(std::move(c));
      }
      // Resolve every target once so malformed records fail at load time.
      rec.alexander();
      for (const Claim& c : rec.claims) rec.target(c.target);
    } catch (const CorpusError&) {
      throw;
    } catch (const std::exception& e) {
      corpus_fail(rec.name, e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<LinkRecord> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file " + path);
  Json document;
  try {
    document = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CorpusError("corpus file " + path + " is not valid JSON: " + e.what());
  }
  return parse_corpus(document);
}

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "unknown";
}

ClaimResult verify_claim(const LinkRecord& record, const Claim& claim, const VerifyOptions& options) {
  ClaimResult out;
  out.id = claim.id;
  out.kind = claim.kind;
  out.target = claim.target;
  out.provenance = claim.provenance;
  out.annotations = claim.annotations;
  out.expected = claim.fields.contains("expected") ? claim.fields.at("expected") : Json();
  if (claim.skip) {
    out.status = ClaimStatus::skipped;
    out.detail = *claim.skip;
    return out;
  }
  try {
    Check c = check_claim(record, claim, options);
    out.status = c.ok ? ClaimStatus::pass : ClaimStatus::fail;
    out.computed = std::move(c.computed);
    out.tolerance = std::move(c.tolerance);
    out.detail = std::move(c.detail);
  } catch (const CorpusError&) {
    throw;
  } catch (const std::exception& e) {
    out.status = ClaimStatus::fail;
    out.detail = std::string("error: ") + e.what();
  }
  return out;
}

VerificationReport verify_corpus(const std::vector<LinkRecord>& records,
                                 const VerifyOptions& options) {
  auto run = [&options](const LinkRecord& record) {
    const auto start = std::chrono::steady_clock::now();
    RecordResult result;
    result.name = record.name;
    for (const Claim& claim : record.claims) {
      if (!options.kinds.empty() &&
          std::find(options.kinds.begin(), options.kinds.end(), claim.kind) == options.kinds.end()) {
        continue;
      }
      result.claims.push_back(verify_claim(record, claim, options));
    }
    result.milliseconds = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return result;
  };

  VerificationReport report;
  if (options.parallel) {
    std::vector<std::future<RecordResult>> futures;
    for (const LinkRecord& r : records) futures.push_back(std::async(std::launch::async, run, std::cref(r)));
    for (auto& f : futures) report.records.push_back(f.get());
  } else {
    for (const LinkRecord& r : records) report.records.push_back(run(r));
  }
  for (const RecordResult& r : report.records) {
    for (const ClaimResult& c : r.claims) {
      switch (c.status) {
        case ClaimStatus::pass: ++report.passed; break;
        case ClaimStatus::skipped: ++report.skipped; break;
        case ClaimStatus::fail:
          ++report.failed;
          if (c.provenance == Provenance::paper) ++report.paper_failures;
          break;
      }
    }
  }
  return report;
}

Json VerificationReport::to_json(bool include_timing) const {
  Json j;
  j["schema_version"] = kCorpusSchemaVersion;
  j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped},
                  {"paper_failures", paper_failures}, {"ok", ok()}};
  Json recs = Json::array();
  for (const RecordResult& r : records) {
    Json rj;
    rj["name"] = r.name;
    if (include_timing) rj["milliseconds"] = r.milliseconds;
    Json claims = Json::array();
    for (const ClaimResult& c : r.claims) {
      Json cj;
      cj["id"] = c.id;
      cj["kind"] = c.kind;
      cj["target"] = c.target;
      cj["provenance"] = provenance_name(c.provenance);
      cj["status"] = to_string(c.status);
      cj["expected"] = c.expected;
      cj["computed"] = c.computed;
      if (!c.tolerance.empty()) cj["tolerance"] = c.tolerance;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      if (!c.annotations.empty()) cj["annotations"] = c.annotations;
      claims.push_back(std::move(cj));
    }
    rj["claims"] = std::move(claims);
    recs.push_back(std::move(rj));
  }
  j["records"] = std::move(recs);
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  std::size_t name_width = 6, id_width = 5, kind_width = 4;
  for (const RecordResult& r : records) {
    name_width = std::max(name_width, r.name.size());
    for (const ClaimResult& c : r.claims) {
      id_width = std::max(id_width, c.id.size());
      kind_width = std::max(kind_width, c.kind.size());
    }
  }
  out << std::left << std::setw(static_cast<int>(name_width) + 2) << "record"
      << std::setw(static_cast<int>(id_width) + 2) << "claim"
      << std::setw(static_cast<int>(kind_width) + 2) << "kind" << std::setw(9) << "source"
      << std::setw(9) << "status"
      << "computed\n";
  for (const RecordResult& r : records) {
    for (const ClaimResult& c : r.claims) {
      std::string computed = c.computed.is_null() ? c.detail : c.computed.dump();
      if (computed.size() > 100) computed = computed.substr(0, 97) + "...";
      out << std::setw(static_cast<int>(name_width) + 2) << r.name
          << std::setw(static_cast<int>(id_width) + 2) << c.id
          << std::setw(static_cast<int>(kind_width) + 2) << c.kind << std::setw(9)
          << provenance_name(c.provenance) << std::setw(9) << to_string(c.status) << computed
          << "\n";
    }
  }
  out << "\n" << passed << " passed, " << failed << " failed (" << paper_failures
      << " PAPER), " << skipped << " skipped\n";
  return out.str();
}

}  // namespace pmahler

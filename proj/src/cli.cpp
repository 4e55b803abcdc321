#include "pmahler/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "pmahler/corpus.hpp"
#include "pmahler/entropy.hpp"
#include "pmahler/errors.hpp"
#include "pmahler/homology.hpp"
#include "pmahler/iwasawa.hpp"
#include "pmahler/mahler.hpp"
#include "pmahler/parser.hpp"
#include "pmahler/pure.hpp"
#include "pmahler/valuation.hpp"

namespace pmahler {

namespace {

struct Inputs {
  std::string poly;
  std::string delta;
  std::string subs;
  std::string vars;
  std::string place = "inf";
  long prime = 0;
  unsigned long nmax = 0;
  long rmax = 6;
  long precision = 20;
  double tol = 1e-12;
  unsigned long n = 2;
  unsigned components = 1;
  std::string format = "text";
  std::string corpus;
  bool no_timing = false;
  bool sequential = false;
  std::vector<std::string> kinds;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// Identifiers in order of first appearance.
std::vector<std::string> infer_variables(const std::string& text) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      const std::string name = text.substr(i, j - i);
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
      i = j;
    } else {
      ++i;
    }
  }
  return vars;
}

LaurentPolynomial input_polynomial(const Inputs& in) {
  if (!in.poly.empty() && !in.delta.empty()) throw CLI::ValidationError("give --poly or --delta, not both");
  if (!in.poly.empty()) return parse_laurent(in.poly);
  if (in.delta.empty()) throw CLI::RequiredError("--poly or --delta");
  if (in.subs.empty()) throw CLI::RequiredError("--subs");
  const auto vars = in.vars.empty() ? infer_variables(in.delta) : split(in.vars, ',');
  const MultivariatePolynomial delta = parse_multivariate(in.delta, vars);
  std::vector<long> exponents;
  for (const std::string& e : split(in.subs, ',')) {
    try {
      exponents.push_back(std::stol(e));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--subs", "exponents must be integers: " + e);
    }
  }
  if (exponents.size() != vars.size()) {
    throw CLI::ValidationError("--subs", "needs one exponent per variable of --delta");
  }
  return substitute_onevar(delta, exponents);
}

Prime checked_prime(long value) {
  if (value < 2) throw DomainError("not a prime: " + std::to_string(value));
  require_prime(static_cast<Prime>(value));
  return static_cast<Prime>(value);
}

Prime required_prime(const Inputs& in) {
  if (in.prime == 0) throw CLI::RequiredError("--prime");
  return checked_prime(in.prime);
}

Place input_place(const Inputs& in) {
  if (in.prime != 0) return checked_prime(in.prime);
  if (in.place == "inf" || in.place == "infinity") return kInfinity;
  try {
    return checked_prime(std::stol(in.place));
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--place", "expected inf or a prime");
  }
}

Json measure_json(const LogMeasure& m) {
  Json j;
  j["place"] = place_name(m.place);
  if (m.exact()) {
    j["log_p_coefficient"] = to_string(m.log_p_coefficient);
  } else {
    j["abs_error"] = m.abs_error;
  }
  j["value"] = m.value;
  j["display"] = m.to_string();
  return j;
}

Json padic_json(const PadicNumber& x) {
  return {{"digits", x.digits()}, {"certified_digits", x.absolute_precision()}};
}

Json pure_json(const PurePadicResult& r) {
  Json j = padic_json(r.value);
  j["prime"] = r.prime;
  j["method"] = to_string(r.method);
  j["heuristic_certificate"] = r.heuristic_certificate;
  if (r.cross_check_digits) j["cross_check_digits"] = *r.cross_check_digits;
  if (!r.roots.empty()) {
    Json roots = Json::array();
    for (const LiftedRoot& root : r.roots) {
      roots.push_back({{"scale_exponent", root.scale_exponent},
                       {"unit", root.unit.digits()},
                       {"residual", root.residual.to_string()}});
    }
    j["roots"] = roots;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json invariants_json(const IwasawaInvariants& inv) {
  Json j = {{"prime", inv.prime}, {"lambda", inv.lambda}, {"mu", inv.mu}};
  if (inv.nu) j["nu"] = *inv.nu;
  if (inv.source == InvariantSource::fitted) j["r0"] = inv.r0;
  j["source"] = to_string(inv.source);
  return j;
}

void render_text(const Json& j, std::ostream& out, int indent = 0) {
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << std::left
        << std::setw(static_cast<int>(width) + 2) << (key + ":");
    if (value.is_object()) {
      out << "\n";
      render_text(value, out, indent + 2);
    } else if (value.is_string()) {
      out << value.get<std::string>() << "\n";
    } else {
      out << value.dump() << "\n";
    }
  }
}

void emit(const Json& j, const Inputs& in, std::ostream& out) {
  if (in.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    render_text(j, out);
  }
}

int run_command(const std::string& command, const Inputs& in, std::ostream& out) {
  if (command == "verify-corpus") {
    if (in.corpus.empty()) throw CLI::RequiredError("--corpus");
    VerifyOptions options;
    options.tolerance = in.tol;
    options.kinds = in.kinds;
    options.parallel = !in.sequential;
    const VerificationReport report = verify_corpus(load_corpus(in.corpus), options);
    if (in.format == "json") {
      out << report.to_json(!in.no_timing).dump(2) << "\n";
    } else {
      out << report.to_text();
    }
    return report.ok() ? kExitOk : kExitVerificationFailed;
  }

  const LaurentPolynomial f = input_polynomial(in);
  Json j;
  j["polynomial"] = f.to_string();

  if (command == "mahler") {
    const Place place = input_place(in);
    j["measure"] = measure_json(place == kInfinity ? mahler_euclidean(f, in.tol) : mahler_padic(f, place));
  } else if (command == "padic-mahler") {
    const Prime p = required_prime(in);
    j["measure"] = measure_json(mahler_padic(f, p));
    const NewtonPolygon poly = newton_polygon(f, p);
    Json segments = Json::array();
    for (const PolygonSegment& s : poly.segments) {
      segments.push_back({{"slope", to_string(s.slope)}, {"length", s.length}});
    }
    j["newton_polygon"] = segments;
    j["defined_on_unit_circle"] = mp_defined_check(f, p);
  } else if (command == "iwasawa") {
    const Prime p = required_prime(in);
    const ConsistencyReport r = verify_consistency(f, p, in.rmax);
    j["analytic"] = invariants_json(r.analytic);
    j["fitted"] = invariants_json(r.fitted);
    j["tower"] = r.tower;
    j["consistent"] = r.consistent();
  } else if (command == "entropy") {
    if (in.prime != 0) {
      j["entropy"] = measure_json(entropy_padic(f, checked_prime(in.prime)));
    } else {
      const EntropyReport r = entropy_total(f, in.tol);
      Json finite = Json::object();
      for (const LogMeasure& h : r.h_finite) finite[std::to_string(h.place)] = to_string(h.log_p_coefficient);
      j["leading"] = to_string(r.leading);
      j["content"] = to_string(r.content);
      j["h_finite"] = finite;
      j["h_inf"] = r.h_inf.value;
      j["total"] = r.total;
      j["total_error"] = r.total_error;
      j["log_measure_primitive"] = r.primitive_measure.value;
      j["consistent"] = r.total_matches && r.roots_match && r.yuzvinski_product_matches;
    }
  } else if (command == "mp") {
    const Prime p = required_prime(in);
    const unsigned long budget = in.nmax ? in.nmax : 200;
    const PurePadicResult est = mp_estimator(f, p, budget, in.precision);
    j["estimator"] = pure_json(est);
    try {
      const PurePadicResult cf = mp_closed_form(f, p, in.precision);
      j["closed_form"] = pure_json(cf);
      j["agreement"] = est.value.agreement(cf.value);
    } catch (const UnsupportedError& e) {
      j["closed_form"] = std::string("unavailable: ") + e.what();
    }
  } else if (command == "hbar") {
    const Prime p = required_prime(in);
    const unsigned long budget = in.nmax ? in.nmax : 200;
    j["hbar"] = pure_json(in.components > 1
                              ? pure_link_growth(f, in.components, p, budget, in.precision)
                              : hbar_p(f, p, budget, in.precision));
  } else if (command == "homology") {
    const HomologyOrder h = homology_order(f, in.n, in.components);
    j["n"] = in.n;
    j["order"] = to_string(h.order);
    j["caveat"] = h.caveat;
  } else if (command == "growth") {
    const Place place = input_place(in);
    const ConvergenceReport r = resultant_limit_estimate(f, place, in.nmax ? in.nmax : 200);
    j["place"] = place_name(place);
    j["n_max"] = r.samples.empty() ? 0 : r.samples.back().n;
    j["limit"] = r.limit;
    if (r.exact_limit) j["exact_limit"] = to_string(*r.exact_limit);
    j["abs_error"] = r.abs_error;
    j["closed_form"] = measure_json(r.closed_form);
    j["error_shrinking"] = r.error_shrinking;
    if (place != kInfinity) j["unrestricted_band"] = r.unrestricted_band;
    j["zero_resultant_ns"] = r.zero_resultant_ns;
    if (!r.notes.empty()) j["notes"] = r.notes;
  }
  emit(j, in, out);
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mahler measures, cyclic resultants and Iwasawa invariants of link polynomials",
               "pmahler"};
  app.require_subcommand(1);
  Inputs in;

  auto add_polynomial = [&in](CLI::App* sub) {
    sub->add_option("--poly", in.poly, "one-variable Laurent polynomial in t");
    sub->add_option("--delta", in.delta, "multivariable polynomial, reduced with --subs");
    sub->add_option("--subs", in.subs, "exponents e_i for x_i -> t^e_i, comma separated");
    sub->add_option("--vars", in.vars, "variable order of --delta (default: order of appearance)");
  };
  auto add_format = [&in](CLI::App* sub) {
    sub->add_option("--format", in.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"mahler", "log Mahler measure at a place"},
      {"padic-mahler", "p-adic log Mahler measure and Newton polygon"},
      {"iwasawa", "Iwasawa invariants, analytic and fitted"},
      {"entropy", "entropy decomposition over places"},
      {"mp", "purely p-adic Mahler measure"},
      {"hbar", "purely p-adic entropy"},
      {"homology", "order of H_1 of the n-fold cyclic branched cover"},
      {"growth", "convergence of (1/n) log|R(f, nu_n)|_v"},
      {"verify-corpus", "check every claim of a corpus file"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_format(sub);
    if (name == "verify-corpus") {
      sub->add_option("--corpus", in.corpus, "corpus JSON file")->required();
      sub->add_option("--tol", in.tol, "absolute tolerance at infinity");
      sub->add_option("--kind", in.kinds, "only claims of these kinds");
      sub->add_flag("--no-timing", in.no_timing, "omit timing fields");
      sub->add_flag("--sequential", in.sequential, "verify records one at a time");
      continue;
    }
    add_polynomial(sub);
    sub->add_option("--prime", in.prime, "prime p");
    if (name == "mahler" || name == "growth") sub->add_option("--place", in.place, "inf or a prime");
    if (name == "mahler" || name == "entropy") sub->add_option("--tol", in.tol, "absolute tolerance");
    if (name == "iwasawa") sub->add_option("--rmax", in.rmax, "largest tower level")->check(CLI::Range(3L, 40L));
    if (name == "mp" || name == "hbar") {
      sub->add_option("--precision", in.precision, "p-adic digits")->check(CLI::Range(3L, 2000L));
      sub->add_option("--nmax", in.nmax, "largest n in the resultant sequence");
    }
    if (name == "hbar" || name == "homology") {
      sub->add_option("--components", in.components, "number of link components")->check(CLI::PositiveNumber);
    }
    if (name == "homology") sub->add_option("--n", in.n, "cover degree")->check(CLI::PositiveNumber);
    if (name == "growth") sub->add_option("--nmax", in.nmax, "largest n")->check(CLI::Range(8UL, 100000UL));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run_command(command, in, out);
  } catch (const CLI::Error& e) {
    err << e.what() << "\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CorpusError& e) {
    err << "corpus error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace pmahler

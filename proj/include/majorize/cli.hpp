#ifndef MAJORIZE_CLI_HPP
#define MAJORIZE_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "majorize/majorize.hpp"
#include "majorize/io.hpp"

namespace majorize::cli {

using io::Json;

inline constexpr const char* kSchema = "majorize.report/1";

enum ExitCode : int { kTrue = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

struct Environment {
  std::size_t group_cap = kDefaultGroupCap;
};

/// Reads MAJORIZE_GROUP_CAP.
inline Environment environment_from_process() {
  Environment env;
  if (const char* cap = std::getenv("MAJORIZE_GROUP_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v > 0) env.group_cap = static_cast<std::size_t>(v);
  }
  return env;
}

/// Parsed command line: the verb path plus raw option strings.
struct Request {
  std::string command;
  std::map<std::string, std::string> options;
  bool allow_negative = false;

  bool has(const std::string& name) const { return options.count(name) > 0; }
  const std::string& get(const std::string& name) const {
    auto it = options.find(name);
    if (it == options.end()) throw InputError("missing required option --" + name);
    return it->second;
  }
  std::string get_or(const std::string& name, std::string fallback) const {
    auto it = options.find(name);
    return it == options.end() ? fallback : it->second;
  }
};

struct Outcome {
  int exit_code = kTrue;
  Json input = Json::object();
  Json body = Json::object();
};

namespace detail {

inline std::string status_name(int code) {
  switch (code) {
    case kTrue: return "ok";
    case kFalse: return "false";
    default: return "error";
  }
}

/// Accepts "S", "e", "(1,2);(1,2,3)" or a JSON array of cycle strings.
inline std::string normalize_group_spec(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first == std::string::npos || text[first] != '[') return text;
  Json j = Json::parse(text, nullptr, false);
  require(!j.is_discarded() && j.is_array(), "malformed group list: " + text);
  std::string joined;
  for (const auto& g : j) {
    require(g.is_string(), "group generators must be cycle strings");
    if (!joined.empty()) joined += ';';
    joined += g.get<std::string>();
  }
  return joined.empty() ? "e" : joined;
}

inline PermGroup group_for(const Request& req, std::size_t n, const Environment& env) {
  return parse_group(normalize_group_spec(req.get_or("group", "S")), n, env.group_cap);
}

inline MeanMode mode_for(const Request& req) {
  auto m = req.get_or("mode", "exact");
  if (m == "exact") return MeanMode::exact;
  if (m == "float") return MeanMode::float_;
  throw InputError("--mode must be 'exact' or 'float', got '" + m + "'");
}

inline Json verdict_json(const MajorizationVerdict& v) {
  Json j{{"relation", std::string(relation_name(v.relation))}};
  if (v.failing_prefix) j["failing_prefix"] = *v.failing_prefix;
  return j;
}

inline Json constant_probe_json(const ConstantProbe& p) {
  return Json{{"mean_b", p.mean_b.str()},
              {"mean_a", p.mean_a.str()},
              {"means_order", std::string(ordering_name(p.means_order))},
              {"totals_order", std::string(ordering_name(p.totals_order))}};
}

// ---- handlers -------------------------------------------------------------

inline Outcome major_check(const Request& req, const Environment&) {
  RVector a = io::parse_vector(req.get("a"));
  RVector b = io::parse_vector(req.get("b"));
  auto v = majorizes(a, b);
  Outcome out;
  out.input = Json{{"a", io::to_json(a)}, {"b", io::to_json(b)}};
  out.body = verdict_json(v);
  out.body["a_sorted"] = io::to_json(decreasing_rearrangement(a));
  out.body["b_sorted"] = io::to_json(decreasing_rearrangement(b));
  out.exit_code = v.majorized() ? kTrue : kFalse;
  return out;
}

inline Outcome major_chain(const Request& req, const Environment&) {
  RVector a = io::parse_vector(req.get("a"));
  RVector b = io::parse_vector(req.get("b"));
  Outcome out;
  out.input = Json{{"a", io::to_json(a)}, {"b", io::to_json(b)}};
  auto v = majorizes(a, b);
  if (!v.strict()) {
    out.body = verdict_json(v);
    out.exit_code = kFalse;
    return out;
  }
  auto chain = build_chain(a, b);
  out.body = io::to_json(chain);
  out.body["length"] = chain.length();
  return out;
}

inline Outcome mean_eval(const Request& req, const Environment& env) {
  RVector x = io::parse_vector(req.get("x"));
  ExponentVector a(io::parse_vector(req.get("a")));
  auto mode = mode_for(req);
  auto group = group_for(req, x.size(), env);
  auto value = symmetric_mean(x, a, group, mode);
  Outcome out;
  out.input = Json{{"x", io::to_json(x)},
                   {"a", io::to_json(a.vec())},
                   {"group", normalize_group_spec(req.get_or("group", "S"))},
                   {"mode", std::string(mode_name(mode))}};
  out.body = Json{{"value", value.str()}, {"mode", std::string(mode_name(value.mode()))}, {"group_order", group.order()}};
  return out;
}

inline Outcome mean_compare(const Request& req, const Environment& env) {
  RVector x = io::parse_vector(req.get("x"));
  ExponentVector a(io::parse_vector(req.get("a")));
  ExponentVector b(io::parse_vector(req.get("b")));
  auto mode = mode_for(req);
  auto group = group_for(req, x.size(), env);
  auto cmp = compare_means(x, a, b, group, mode);
  Outcome out;
  out.input = Json{{"x", io::to_json(x)},
                   {"a", io::to_json(a.vec())},
                   {"b", io::to_json(b.vec())},
                   {"group", normalize_group_spec(req.get_or("group", "S"))},
                   {"mode", std::string(mode_name(mode))}};
  out.body = Json{{"order", std::string(ordering_name(cmp.order))},
                  {"lhs", cmp.lhs.str()},
                  {"rhs", cmp.rhs.str()},
                  {"mode", std::string(mode_name(mode))}};
  return out;
}

inline Outcome mean_amgm(const Request& req, const Environment&) {
  ExponentVector a(io::parse_vector(req.get("a")));
  ExponentVector b(io::parse_vector(req.get("b")));
  auto cert = amgm_certificate(a, b);
  Outcome out;
  out.input = Json{{"a", io::to_json(a.vec())}, {"b", io::to_json(b.vec())}};
  out.body = Json{{"c", io::to_json(cert.c)}, {"sum", to_string(cert.c.sum())}, {"nonzero", cert.nonzero}};
  return out;
}

inline Outcome hull_member(const Request& req, const Environment& env) {
  RVector a = io::parse_vector(req.get("a"));
  RVector b = io::parse_vector(req.get("b"));
  auto group = group_for(req, a.size(), env);
  MembershipOptions opts;
  opts.require_nonnegative = !req.allow_negative;
  auto result = membership(b, a, group, opts);
  Outcome out;
  out.input = Json{{"a", io::to_json(a)},
                   {"b", io::to_json(b)},
                   {"group", normalize_group_spec(req.get_or("group", "S"))},
                   {"allow_negative", req.allow_negative}};
  if (result.member()) {
    out.body = Json{{"member", true}, {"weights", io::to_json(result.weights())}};
  } else {
    out.body = Json{{"member", false}, {"certificate", io::to_json(result.separation())}};
    out.exit_code = kFalse;
  }
  return out;
}

inline Outcome hull_hlp(const Request& req, const Environment&) {
  RVector a = io::parse_vector(req.get("a"));
  RVector b = io::parse_vector(req.get("b"));
  Outcome out;
  out.input = Json{{"a", io::to_json(a)}, {"b", io::to_json(b)}};
  auto v = majorizes(a, b);
  if (!v.majorized()) {
    out.body = verdict_json(v);
    out.body["majorized"] = false;
    out.exit_code = kFalse;
    return out;
  }
  auto s = hlp_matrix(a, b);
  auto terms = birkhoff_decompose(s);
  out.body = Json{{"majorized", true},
                  {"matrix", io::to_json(s.matrix())},
                  {"birkhoff", io::to_json(terms)},
                  {"term_count", terms.terms.size()}};
  return out;
}

inline Outcome hull_orbit(const Request& req, const Environment& env) {
  RVector a = io::parse_vector(req.get("a"));
  auto group = group_for(req, a.size(), env);
  Json points = Json::array();
  for (const auto& p : orbit_points(a, group))
    points.push_back(Json{{"point", io::to_json(p.point)}, {"gamma", p.representative.to_cycle_string()}});
  Outcome out;
  out.input = Json{{"a", io::to_json(a)}, {"group", normalize_group_spec(req.get_or("group", "S"))}};
  out.body = Json{{"size", points.size()}, {"points", points}};
  return out;
}

inline Json witness_transcript(const RadoWitness& w, const RVector& a, const RVector& b, const PermGroup& group) {
  Json t = Json::array();
  for (const auto& p : orbit_points(a, group)) {
    Rational value = dot(w.certificate.u, p.point);
    t.push_back(Json{{"check", "<u, gamma a> <= c"},
                     {"gamma", p.representative.to_cycle_string()},
                     {"value", to_string(value)},
                     {"bound", to_string(w.certificate.c)},
                     {"holds", value <= w.certificate.c}});
  }
  Rational ub = dot(w.certificate.u, b);
  t.push_back(Json{{"check", "<u, b> >= c + margin"},
                   {"value", to_string(ub)},
                   {"bound", to_string(w.certificate.c + w.certificate.margin)},
                   {"holds", ub >= w.certificate.c + w.certificate.margin}});
  const auto p = num(w.certificate.margin).convert_to<unsigned>();
  const auto q = den(w.certificate.margin).convert_to<unsigned>();
  Integer lhs = pow(w.M, p);
  Integer rhs = pow(Integer(static_cast<unsigned long long>(group.order())), q);
  t.push_back(Json{{"check", "M^p > |G|^q for margin p/q"},
                   {"value", lhs.str()},
                   {"bound", rhs.str()},
                   {"holds", lhs > rhs}});
  t.push_back(Json{{"check", "[x^b]_G > [x^a]_G"},
                   {"value", w.lhs.str()},
                   {"bound", w.rhs.str()},
                   {"holds", compare(w.lhs, w.rhs) == Ordering::greater}});
  return t;
}

inline Outcome rado_witness(const Request& req, const Environment& env) {
  ExponentVector a(io::parse_vector(req.get("a")));
  ExponentVector b(io::parse_vector(req.get("b")));
  require_same_length(a.vec(), b.vec(), "rado witness");
  auto group = group_for(req, a.size(), env);
  Outcome out;
  out.input = Json{{"a", io::to_json(a.vec())},
                   {"b", io::to_json(b.vec())},
                   {"group", normalize_group_spec(req.get_or("group", "S"))}};
  auto result = membership(b.vec(), a.vec(), group);
  if (result.member()) {
    // b ∈ K_G(a): no witness can exist.
    out.body = Json{{"member", true}, {"weights", io::to_json(result.weights())}};
    out.exit_code = kFalse;
    return out;
  }
  auto w = build_rado_witness(result.separation(), a, b, group);
  out.body = Json{{"member", false},
                  {"certificate", io::to_json(w.certificate)},
                  {"group_order", group.order()},
                  {"M", w.M.str()},
                  {"x", io::to_json(w.x)},
                  {"lhs", w.lhs.str()},
                  {"rhs", w.rhs.str()},
                  {"mode", std::string(mode_name(w.lhs.mode()))},
                  {"transcript", witness_transcript(w, a.vec(), b.vec(), group)}};
  return out;
}

inline Outcome rado_probe(const Request& req, const Environment&) {
  ExponentVector a(io::parse_vector(req.get("a")));
  ExponentVector b(io::parse_vector(req.get("b")));
  Rational w = parse_rational(req.get_or("w", "2"));
  Outcome out;
  out.input = Json{{"a", io::to_json(a.vec())}, {"b", io::to_json(b.vec())}, {"w", to_string(w)}};
  out.body["constant"] = constant_probe_json(probe_constant(a, b, w));
  if (w > 1) {
    Json steps = Json::array();
    bool prefixes_dominated = true;
    for (const auto& s : probe_step_vectors(a, b, w)) {
      steps.push_back(Json{{"k", s.k},
                           {"mean_b", s.mean_b.str()},
                           {"mean_a", s.mean_a.str()},
                           {"at_w", std::string(ordering_name(s.at_w))},
                           {"prefix_b", to_string(s.prefix_b)},
                           {"prefix_a", to_string(s.prefix_a)},
                           {"leading", std::string(ordering_name(s.leading))}});
      prefixes_dominated = prefixes_dominated && s.leading != Ordering::greater;
    }
    out.body["steps"] = steps;
    out.body["prefixes_dominated"] = prefixes_dominated;
  }
  return out;
}

inline Outcome multadd_check(const Request& req, const Environment&) {
  RVector u = io::parse_vector(req.get("u"));
  RVector v = io::parse_vector(req.get("v"));
  Outcome out;
  out.input = Json{{"u", io::to_json(u)}, {"v", io::to_json(v)}};
  auto pc = check_prefix_products(u, v);
  out.body["prefix_ok"] = pc.ok;
  if (!pc.ok) {
    out.body["failing_j"] = *pc.failing_j;
    out.exit_code = kFalse;
    return out;
  }
  MultiplicativePair pair(u, v);
  out.body["sum_u"] = to_string(u.sum());
  out.body["sum_v"] = to_string(v.sum());
  if (u == v) {
    out.body["strict"] = false;
    out.exit_code = kFalse;
    return out;
  }
  auto sd = sum_dominance(pair);
  out.body["strict"] = sd.strict;
  out.body["diverging_index"] = pair.diverging_index().value_or(0);
  out.body["augmentation"] = Json{{"u_next", to_string(sd.augmentation.u_next)},
                                  {"v_next", to_string(sd.augmentation.v_next)},
                                  {"lambda_scale", to_string(sd.augmentation.lambda_scale)},
                                  {"augmented_u", io::to_json(sd.augmentation.augmented_u(pair))},
                                  {"augmented_v", io::to_json(sd.augmentation.augmented_v(pair))}};
  Json lu = Json::array(), lv = Json::array();
  for (double d : sd.log_u) lu.push_back(format_double(d));
  for (double d : sd.log_v) lv.push_back(format_double(d));
  out.body["log_u"] = lu;
  out.body["log_v"] = lv;
  out.body["log_majorized"] = sd.log_majorized;
  out.exit_code = sd.strict ? kTrue : kFalse;
  return out;
}

inline Outcome group_enumerate(const Request& req, const Environment& env) {
  const std::string& n_text = req.get("n");
  require(!n_text.empty() && n_text.size() < 6 && std::all_of(n_text.begin(), n_text.end(), ::isdigit),
          "--n must be a positive integer");
  std::size_t n = std::stoul(n_text);
  require(n >= 1, "--n must be a positive integer");
  auto group = group_for(req, n, env);
  Json elements = Json::array();
  for (const auto& g : group) elements.push_back(g.to_cycle_string());
  Outcome out;
  out.input = Json{{"n", n}, {"group", normalize_group_spec(req.get_or("group", "S"))}};
  out.body = Json{{"order", group.order()}, {"elements", elements}};
  return out;
}

// ---- verify ---------------------------------------------------------------

inline Request request_from_input(const std::string& command, const Json& input) {
  Request r;
  r.command = command;
  for (const auto& [key, value] : input.items()) {
    if (key == "allow_negative") {
      r.allow_negative = value.get<bool>();
      continue;
    }
    r.options[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  return r;
}

/// Re-checks a previously emitted report. Certificates (chains, weights,
/// separations, matrices, witnesses) are checked as given; plain predicates
/// are recomputed and compared.
inline std::optional<std::string> verify_report(const Json& report, const Environment& env) {
  require(report.is_object() && report.contains("command") && report.contains("input"),
          "verify: expected a report object with \"command\" and \"input\"");
  require(report.value("status", "") != "error", "verify: cannot verify an error report");
  const std::string cmd = report.at("command").get<std::string>();
  const Json& input = report.at("input");
  Request req = request_from_input(cmd, input);

  if (cmd == "major chain") {
    RVector a = io::vector_from_json(input.at("a"));
    RVector b = io::vector_from_json(input.at("b"));
    if (!report.contains("vectors")) {
      if (majorizes(a, b).strict()) return "report omits a chain for a strict pair";
      return std::nullopt;
    }
    return check_chain(io::chain_from_json(report), a, b);
  }
  if (cmd == "hull member" || (cmd == "rado witness" && report.value("member", false))) {
    RVector a = io::vector_from_json(input.at("a"));
    RVector b = io::vector_from_json(input.at("b"));
    auto group = group_for(req, a.size(), env);
    if (report.at("member").get<bool>()) return check_membership(io::membership_from_json(report.at("weights"), a.size()), a, b, group);
    return check_separation(io::separation_from_json(report.at("certificate")), a, b, group);
  }
  if (cmd == "hull hlp") {
    RVector a = io::vector_from_json(input.at("a"));
    RVector b = io::vector_from_json(input.at("b"));
    if (!report.value("majorized", false)) {
      if (majorizes(a, b).majorized()) return "report claims not majorized";
      return std::nullopt;
    }
    RMatrix m = io::matrix_from_json(report.at("matrix"));
    if (m.order() != a.size()) return "matrix has the wrong order";
    if (!m.is_doubly_stochastic()) return "matrix is not doubly stochastic";
    if (!(m * a == b)) return "S a != b";
    auto d = io::birkhoff_from_json(report.at("birkhoff"), a.size());
    if (d.total_weight() != 1) return "Birkhoff weights do not sum to 1";
    for (const auto& t : d.terms)
      if (t.weight < 0) return "negative Birkhoff weight";
    if (!(d.reconstruct(a.size()) == m)) return "Birkhoff terms do not reconstruct S";
    if (d.terms.size() > (a.size() - 1) * (a.size() - 1) + 1) return "too many Birkhoff terms";
    return std::nullopt;
  }
  if (cmd == "rado witness") {
    ExponentVector a(io::vector_from_json(input.at("a")));
    ExponentVector b(io::vector_from_json(input.at("b")));
    auto group = group_for(req, a.size(), env);
    RadoWitness w{io::separation_from_json(report.at("certificate")), Integer(report.at("M").get<std::string>()),
                  io::vector_from_json(report.at("x")), MeanValue(Rational(0)), MeanValue(Rational(0))};
    if (auto p = check_rado_witness(w, a, b, group)) return p;
    auto cmp = compare_means(w.x, a, b, group,
                             a.all_integral() && b.all_integral() ? MeanMode::exact : MeanMode::float_);
    if (cmp.lhs.str() != report.at("lhs").get<std::string>() || cmp.rhs.str() != report.at("rhs").get<std::string>())
      return "reported mean values do not match recomputation";
    return std::nullopt;
  }

  using Handler = Outcome (*)(const Request&, const Environment&);
  static const std::map<std::string, Handler> recompute = {
      {"major check", major_check},   {"mean eval", mean_eval},     {"mean compare", mean_compare},
      {"mean amgm", mean_amgm},       {"hull orbit", hull_orbit},   {"rado probe", rado_probe},
      {"multadd check", multadd_check}, {"group enumerate", group_enumerate}};
  auto it = recompute.find(cmd);
  require(it != recompute.end(), "verify: unknown command '" + cmd + "'");
  Outcome fresh = it->second(req, env);
  for (const auto& [key, value] : fresh.body.items()) {
    if (!report.contains(key)) return "report lacks field '" + key + "'";
    if (report.at(key) != value) return "field '" + key + "' does not match recomputation";
  }
  return std::nullopt;
}

inline Outcome verify(const Request& req, const Environment& env) {
  Json report = Json::parse(req.get("report"), nullptr, false);
  require(!report.is_discarded(), "verify: report is not valid JSON");
  auto problem = verify_report(report, env);
  Outcome out;
  out.input = Json{{"command", report.at("command")}};
  out.body = Json{{"verified", !problem.has_value()}};
  if (problem) {
    out.body["reason"] = *problem;
    out.exit_code = kFalse;
  }
  return out;
}

struct Verb {
  const char* group;
  const char* name;
  const char* description;
  std::vector<const char*> options;
  Outcome (*handler)(const Request&, const Environment&);
};

inline const std::vector<Verb>& verbs() {
  static const std::vector<Verb> table = {
      {"major", "check", "decide whether a majorizes b", {"a", "b"}, major_check},
      {"major", "chain", "strict majorization chain from a down to b", {"a", "b"}, major_chain},
      {"mean", "eval", "G-symmetric mean [x^a]_G", {"x", "a", "group", "mode"}, mean_eval},
      {"mean", "compare", "compare [x^b]_G with [x^a]_G", {"x", "a", "b", "group", "mode"}, mean_compare},
      {"mean", "amgm", "difference vector c = a - b with zero sum", {"a", "b"}, mean_amgm},
      {"hull", "member", "decide b in K_G(a) with a certificate", {"a", "b", "group"}, hull_member},
      {"hull", "hlp", "doubly stochastic S with b = S a and its Birkhoff terms", {"a", "b"}, hull_hlp},
      {"hull", "orbit", "distinct points of the orbit {ga : g in G}", {"a", "group"}, hull_orbit},
      {"rado", "witness", "positive x with [x^b]_G > [x^a]_G when b is outside K_G(a)", {"a", "b", "group"}, rado_witness},
      {"rado", "probe", "constant and step-vector probes of the converse", {"a", "b", "w"}, rado_probe},
      {"multadd", "check", "prefix-product dominance and the sum inequality", {"u", "v"}, multadd_check},
      {"group", "enumerate", "list the elements of a permutation group", {"n", "group"}, group_enumerate},
      {"verify", "", "re-check a report produced by another command", {"report"}, verify},
  };
  return table;
}

inline void emit(std::ostream& out, const std::string& command, const Outcome& outcome, bool quiet, bool pretty,
                 const std::optional<std::string>& error = std::nullopt) {
  Json doc{{"schema", kSchema}, {"command", command}, {"status", status_name(outcome.exit_code)}};
  if (error) doc["error"] = *error;
  if (!quiet) {
    if (!outcome.input.empty()) doc["input"] = outcome.input;
    for (const auto& [key, value] : outcome.body.items()) doc[key] = value;
  }
  out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name. Writes a single
/// JSON document to `out` and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in,
               const Environment& env = environment_from_process()) {
  using namespace detail;
  CLI::App app{"Exact majorization, symmetric means, Muirhead and Rado certificates", "majorize"};
  app.require_subcommand(1);
  bool quiet = false, pretty = false, use_stdin = false, allow_negative = false;
  app.add_flag("--quiet", quiet, "suppress the payload");
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.add_flag("--stdin", use_stdin, "read one JSON request object (or a report, for verify) from stdin");
  app.fallthrough();

  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<const Verb*, CLI::App*>> leaves;
  std::vector<std::map<std::string, std::string>> values(verbs().size());
  std::vector<std::map<std::string, CLI::Option*>> handles(verbs().size());
  for (std::size_t i = 0; i < verbs().size(); ++i) {
    const Verb& verb = verbs()[i];
    CLI::App* leaf = nullptr;
    if (std::string(verb.name).empty()) {
      leaf = app.add_subcommand(verb.group, verb.description);
    } else {
      auto& parent = groups[verb.group];
      if (!parent) {
        parent = app.add_subcommand(verb.group, std::string(verb.group) + " commands");
        parent->require_subcommand(1);
        parent->fallthrough();
      }
      leaf = parent->add_subcommand(verb.name, verb.description);
    }
    leaf->fallthrough();
    for (const char* opt : verb.options) handles[i][opt] = leaf->add_option(std::string("--") + opt, values[i][opt]);
    if (std::string(verb.group) == "hull" && std::string(verb.name) == "member")
      leaf->add_flag("--allow-negative", allow_negative, "accept vectors with negative coordinates");
    leaves.emplace_back(&verb, leaf);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    emit(out, "", Outcome{kUsage, {}, {}}, false, pretty, std::string(e.what()));
    return kUsage;
  }

  std::size_t chosen = leaves.size();
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i].second->parsed()) chosen = i;
  if (chosen == leaves.size()) {
    emit(out, "", Outcome{kUsage, {}, {}}, false, pretty, std::string("no command given"));
    return kUsage;
  }
  const Verb& verb = *leaves[chosen].first;
  Request req;
  req.command = std::string(verb.group) + (std::string(verb.name).empty() ? "" : " " + std::string(verb.name));
  req.allow_negative = allow_negative;
  for (const auto& [name, opt] : handles[chosen])
    if (opt->count() > 0) req.options[name] = values[chosen][name];

  try {
    if (use_stdin) {
      std::string text(std::istreambuf_iterator<char>(in), {});
      if (req.command == "verify") {
        req.options["report"] = text;
      } else {
        Json j = Json::parse(text, nullptr, false);
        require(!j.is_discarded() && j.is_object(), "--stdin expects one JSON object");
        for (const auto& [key, value] : j.items()) {
          if (key == "allow_negative" && value.is_boolean()) {
            req.allow_negative = req.allow_negative || value.get<bool>();
            continue;
          }
          if (!req.has(key)) req.options[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
      }
    }
    Outcome outcome = verb.handler(req, env);
    emit(out, req.command, outcome, quiet, pretty);
    return outcome.exit_code;
  } catch (const InvariantError& e) {
    emit(out, req.command, Outcome{kInternal, {}, {}}, false, pretty, std::string("internal: ") + e.what());
    return kInternal;
  } catch (const InputError& e) {
    emit(out, req.command, Outcome{kUsage, {}, {}}, false, pretty, std::string(e.what()));
    return kUsage;
  } catch (const Json::exception& e) {
    emit(out, req.command, Outcome{kUsage, {}, {}}, false, pretty, std::string("bad JSON: ") + e.what());
    return kUsage;
  }
}

}  // namespace majorize::cli

#endif  // MAJORIZE_CLI_HPP

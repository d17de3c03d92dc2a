#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "cli/input.hpp"
#include "cli/support.hpp"
#include "ggor/construct.hpp"
#include "ggor/presentation.hpp"

namespace ggor::cli {
namespace {

struct Context {
  explicit Context(const JobSpec& s) : spec(s) {}
  const JobSpec& spec;
  Json result = Json::object();
  std::optional<Json> verdict;
  std::string witness;
  std::string digest_source;
};

std::string option(const JobSpec& spec, const std::string& key, const std::string& fallback = "") {
  auto it = spec.options.find(key);
  return it == spec.options.end() ? fallback : it->second;
}

Input input_of(Context& c) {
  if (!c.spec.input_path) throw InputError(c.spec.command + ": an input file is required");
  Input in = load_input(*c.spec.input_path, parse_order(option(c.spec, "order", "grevlex")));
  c.digest_source = in.raw;
  return in;
}

PolyMatrix matrix_of(Context& c) {
  Input in = input_of(c);
  if (!in.matrix) throw InputError(c.spec.input_path->string() + ": this command needs a \"matrix\"");
  return *in.matrix;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not an integer list: " + text);
    }
  }
  return out;
}

// --seq "(..)" or --homogeneous "n a b"; records the digest source.
BettiSequence sequence_option(Context& c) {
  const std::string seq = option(c.spec, "seq"), hom = option(c.spec, "homogeneous");
  if (seq.empty() == hom.empty()) throw InputError(c.spec.command + ": give exactly one of --seq and --homogeneous");
  if (!seq.empty()) {
    c.digest_source = c.spec.command + " seq " + seq;
    try {
      return parse_betti(seq);
    } catch (const Error& e) {
      throw InputError(std::string("--seq: ") + e.what());
    }
  }
  std::istringstream in(hom);
  long long n = 0, a = 0, b = 0;
  if (!(in >> n >> a >> b) || n < 1) throw InputError("--homogeneous expects three integers n a b");
  c.digest_source = c.spec.command + " homogeneous " + hom;
  return BettiSequence::homogeneous(static_cast<std::size_t>(n), a, b);
}

int cmd_gamma(Context& c) {
  auto g = gamma(matrix_of(c));
  c.result["gamma"] = to_json(g.components);
  c.result["columns"] = g.columns;
  c.result["normalization"] = g.normalization_note;
  return Ok;
}

int cmd_check(Context& c) {
  PolyMatrix m = matrix_of(c);
  if (!m.is_square()) {
    auto r = check_presentation_rect_report(m);
    c.result["is_presentation"] = r.is_presentation;
    c.result["gamma"] = to_json(r.gamma.components);
    c.result["is_minimal"] = r.is_minimal;
    c.result["hilbert_burch_columns"] = r.hilbert_burch_columns ? Json(*r.hilbert_burch_columns) : Json(nullptr);
    return r.is_presentation ? Ok : Negative;
  }
  auto r = check_presentation(m);
  c.result["is_presentation"] = r.is_presentation;
  c.result["failure_reason"] = to_string(r.failure_reason);
  c.result["gamma"] = r.gamma ? to_json(r.gamma->components) : Json(nullptr);
  c.result["gamma_transpose"] = r.gamma_transpose ? to_json(r.gamma_transpose->components) : Json(nullptr);
  c.result["cofactor_unit"] = r.cofactor_unit ? Json(r.cofactor_unit->to_string()) : Json(nullptr);
  c.result["height_J"] = r.height_J ? Json(*r.height_J) : Json(nullptr);
  c.result["J_is_unit"] = r.J_is_unit;
  c.result["is_minimal"] = r.is_minimal;
  c.result["zero_components"] = r.zero_components;
  c.witness = r.is_presentation ? "" : to_string(r.failure_reason);
  return r.is_presentation ? Ok : Negative;
}

Json resolution_json(const GradedResolution& res) {
  Json out;
  out["shifts"] = res.shifts;
  out["minimal"] = res.minimal;
  Json maps = Json::array();
  for (const auto& m : res.maps) maps.push_back(to_json(m));
  out["maps"] = maps;
  try {
    out["betti"] = sequence_of(res).to_string();
  } catch (const DomainError&) {
    out["betti"] = nullptr;
  }
  return out;
}

int cmd_resolve(Context& c) {
  Input in = input_of(c);
  if (in.matrix) {
    auto res = build_resolution(*in.matrix);
    c.result = resolution_json(res);
    auto ex = verify_exactness(res);
    c.result["exact"] = ex.exact;
    return ex.exact ? Ok : Negative;
  }
  auto res = minimal_free_resolution(*in.ideal);
  c.result = resolution_json(res);
  if (option(c.spec, "verify") == "true") c.result["exact"] = verify_exactness(res).exact;
  return Ok;
}

int cmd_zeta(Context& c) {
  auto z = zeta(matrix_of(c));
  c.result["nu_I"] = z.nu_I;
  c.result["nu_J"] = z.nu_J;
  c.result["zeta"] = z.zeta;
  c.result["normalized_rho"] = to_json(z.normalized_rho);
  c.result["transformed"] = to_json(z.transformed);
  return Ok;
}

int cmd_decompose(Context& c) {
  auto d = decompose(matrix_of(c));
  c.result["minors"] = to_json(d.minors);
  c.result["I"] = to_json(d.total.generators());
  c.result["I_B"] = to_json(d.y.generators());
  c.result["H"] = to_json(d.z.generators());
  c.result["I_B_is_unit"] = d.y_empty;
  c.result["regular"] = d.regular;
  c.result["identity_verified"] = d.identity_verified;
  c.witness = d.verdict;
  return d.regular && d.identity_verified ? Ok : Negative;
}

int cmd_classify(Context& c) {
  BettiSequence seq = sequence_option(c);
  Verdict v = classify(seq);
  c.result["sequence"] = to_json(seq);
  c.verdict = to_json(v);
  c.witness = v.witness;
  return exit_for(v.status);
}

int cmd_reduce(Context& c) {
  BettiSequence seq = sequence_option(c);
  if (seq.size() < 4) throw InputError("betti-reduce needs at least four generators");
  const std::string strategy = option(c.spec, "strategy", "largest");
  if (strategy != "largest" && strategy != "smallest") throw InputError("--strategy must be largest or smallest");
  auto red = classify_gaeta_reduce(seq, strategy == "largest" ? ReductionStrategy::LargestT : ReductionStrategy::SmallestT);
  c.result["sequence"] = to_json(seq);
  Json steps = Json::array();
  for (const auto& s : red.steps) steps.push_back(Json{{"t", s.t}, {"d", s.d}, {"result", to_json(s.result)}});
  c.result["steps"] = steps;
  c.result["residue"] = to_json(red.residue);
  c.result["total_shift"] = red.total_shift;
  c.verdict = to_json(red.verdict);
  c.witness = red.verdict.witness;
  return exit_for(red.verdict.status);
}

int cmd_lift(Context& c) {
  BettiSequence seq = sequence_option(c);
  const std::string u_text = option(c.spec, "u");
  if (u_text.empty()) throw InputError("betti-lift needs --u");
  auto u = parse_ints(u_text);
  c.digest_source += " u " + u_text;
  BettiSequence lifted = lift(seq, u);
  Verdict before = classify(seq);
  c.result["sequence"] = to_json(seq);
  c.result["u"] = u;
  c.result["lifted"] = to_json(lifted);
  if (before.status == Essentiality::Essential) {
    c.verdict = to_json(Verdict{Essentiality::Essential, "lift", "inherited from the essential input"});
    c.witness = "lift of an essential sequence";
  } else {
    Verdict after = classify(lifted);
    c.verdict = to_json(after);
    c.witness = after.witness;
  }
  return Ok;
}

int cmd_construct(Context& c) {
  BettiSequence seq = sequence_option(c);
  Verdict v = classify(seq);
  c.result["sequence"] = to_json(seq);
  c.verdict = to_json(v);
  if (v.status != Essentiality::Essential) {
    c.witness = "no construction: " + v.witness;
    return exit_for(v.status);
  }
  Construction k = realize(seq);
  c.witness = k.witness;
  c.result["ring"] = k.matrix.ring()->variables();
  c.result["matrix"] = to_json(k.matrix);
  c.result["ideal"] = to_json(gamma(k.matrix).components);
  c.result["predicted"] = to_json(k.predicted);
  if (option(c.spec, "verify", "true") != "false") {
    auto chk = verify_construction(k);
    c.result["verification"] = Json{{"is_presentation", chk.is_presentation},
                                    {"resolved", chk.resolved ? Json(chk.resolved->to_string()) : Json(nullptr)},
                                    {"matches", chk.matches}};
    if (!chk.matches) throw Error("construction failed verification: " + chk.detail);
  }
  return Ok;
}

int cmd_paper(Context& c) {
  if (!c.spec.scenario) throw InputError("verify-paper-example needs a scenario name");
  return run_scenario(*c.spec.scenario, c.spec, c.result, c.digest_source);
}

const std::map<std::string, std::function<int(Context&)>>& table() {
  static const std::map<std::string, std::function<int(Context&)>> t{
      {"gamma", cmd_gamma},          {"check", cmd_check},
      {"resolve", cmd_resolve},      {"zeta", cmd_zeta},
      {"decompose", cmd_decompose},  {"betti-classify", cmd_classify},
      {"betti-reduce", cmd_reduce},  {"betti-lift", cmd_lift},
      {"construct", cmd_construct},  {"verify-paper-example", cmd_paper},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"gamma",          "check",        "resolve",    "zeta",
                                              "decompose",      "betti-classify", "betti-reduce", "betti-lift",
                                              "construct",      "verify-paper-example"};
  return names;
}

JobResult run(const JobSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  Context c(spec);
  JobResult out;
  auto budget = spec.options.find("budget-seconds");
  if (budget != spec.options.end()) setenv("GGOR_BUDGET_SECONDS", budget->second.c_str(), 1);
  std::optional<std::string> error;
  try {
    auto it = table().find(spec.command);
    if (it == table().end()) throw InputError("unknown command '" + spec.command + "'");
    out.exit_code = it->second(c);
  } catch (const BudgetExceeded& e) {
    error = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    error = e.what();
  }
  if (error) out.exit_code = Failure;

  Json& r = out.report;
  r["command"] = spec.command;
  r["input_digest"] = sha256_hex(c.digest_source);
  r["result"] = c.result;
  if (c.verdict) r["verdict"] = *c.verdict;
  r["witness"] = c.witness;
  if (error) r["error"] = *error;
  r["exit_code"] = out.exit_code;
  r["timings"] = Json{{"total_seconds",
                       std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  return out;
}

}  // namespace ggor::cli

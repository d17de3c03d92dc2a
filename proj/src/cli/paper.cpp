#include <cstdlib>
#include <functional>

#include "cli/input.hpp"
#include "cli/support.hpp"
#include "ggor/construct.hpp"
#include "ggor/presentation.hpp"

namespace ggor::cli {
namespace {

struct Checks {
  Json items = Json::array();
  bool all_ok = true;
  void add(const std::string& name, const Json& expected, const Json& actual, bool ok) {
    items.push_back(Json{{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
    all_ok = all_ok && ok;
  }
};

Input fixture(const std::string& name, std::string& digest) {
  Input in = load_input(fixture_dir() / (name + ".json"), MonomialOrder::Grevlex);
  digest += in.raw;
  return in;
}

bool proportional(const std::vector<Polynomial>& p, const std::vector<Polynomial>& q) {
  if (p.size() != q.size()) return false;
  std::optional<Polynomial> c;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero() != q[i].is_zero()) return false;
    if (p[i].is_zero()) continue;
    if (!c) {
      auto t = try_divide(p[i], q[i]);
      if (!t || !t->is_unit()) return false;
      c = *t;
    }
    if (p[i] != *c * q[i]) return false;
  }
  return true;
}

void intro(Checks& ch, std::string& digest) {
  Input in = fixture("intro-example", digest);
  const PolyMatrix& m = *in.matrix;
  std::vector<Polynomial> expected;
  for (const auto& s : in.expected["gamma"]) expected.push_back(parse(s.get<std::string>(), in.ring));
  auto g = gamma(m).components;
  ch.add("gamma(M)", in.expected["gamma"], to_json(g), proportional(g, expected));
  auto r = check_presentation(m);
  ch.add("check_presentation(M)", true, r.is_presentation, r.is_presentation);
  auto rt = check_presentation(m.transpose());
  ch.add("check_presentation(M^T)", false, rt.is_presentation, !rt.is_presentation);
  ch.add("failure reason for M^T", to_string(PresentationFailure::HeightJTooSmall), to_string(rt.failure_reason),
         rt.failure_reason == PresentationFailure::HeightJTooSmall);
  const int want = in.expected["transpose_height_J"].get<int>();
  ch.add("height J for M^T", want, rt.height_J ? Json(*rt.height_J) : Json(nullptr), rt.height_J == want);
}

void resolve_fixture(const std::string& name, Checks& ch, std::string& digest) {
  Input in = fixture(name, digest);
  auto res = minimal_free_resolution(*in.ideal);
  std::string got;
  try {
    got = sequence_of(res).to_string();
  } catch (const DomainError& e) {
    got = e.what();
  }
  const std::string want = parse_betti(in.expected["betti"].get<std::string>()).to_string();
  ch.add("Betti sequence", want, got, got == want);
}

void gaeta_remark(Checks& ch, std::string& digest) {
  auto seq = BettiSequence::homogeneous(4, 3, 5);
  digest += seq.to_string();
  ch.add("is a Gaeta sequence", true, seq.is_gaeta(), seq.is_gaeta());
  auto h = hilbert_from_betti(seq, seq.s - 2, 3);
  ch.add("H(s-2) in three variables", 0, h, h == 0);
  auto v = classify(seq);
  ch.add("verdict", "NotEssential", to_string(v.status) + " (" + v.rule + ")", v.status == Essentiality::NotEssential);
}

void closing_remark(const JobSpec& spec, Checks& ch, std::string& digest) {
  Input in = fixture("closing-remark", digest);
  const int want = in.expected["height"].get<int>();
  const int got = height(*in.ideal);
  ch.add("height", want, got, got == want);
  auto v = classify(BettiSequence::homogeneous(4, 5, 8));
  ch.add("rule verdict", "Unknown", to_string(v.status), v.status == Essentiality::Unknown);
  if (auto it = spec.options.find("full"); it != spec.options.end() && it->second == "false") return;
  // The full resolution gets a larger default budget than single Groebner calls.
  if (!spec.options.count("budget-seconds") && !std::getenv("GGOR_BUDGET_SECONDS"))
    setenv("GGOR_BUDGET_SECONDS", "1800", 1);
  const std::string want_seq = parse_betti(in.expected["betti"].get<std::string>()).to_string();
  try {
    auto seq = sequence_of(minimal_free_resolution(*in.ideal)).to_string();
    ch.add("Betti sequence", want_seq, seq, seq == want_seq);
  } catch (const BudgetExceeded& e) {
    ch.add("Betti sequence", want_seq, std::string("budget exceeded: ") + e.what(), false);
  }
}

void construction(const std::string& label, const Construction& c, Checks& ch, std::string& digest) {
  digest += c.predicted.to_string();
  auto chk = verify_construction(c);
  ch.add(label + ": presentation", true, chk.is_presentation, chk.is_presentation);
  ch.add(label + ": resolved sequence", c.predicted.to_string(),
         chk.resolved ? Json(chk.resolved->to_string()) : Json(chk.detail), chk.matches);
}

void prop_bet_example(Checks& ch, std::string& digest) {
  auto r = make_ring({"x", "y", "z", "u", "v", "w"});
  auto pb = prop_bet({parse("x", r), parse("y^2", r), parse("z^3", r)}, {parse("u", r), parse("v", r), parse("w", r)});
  ch.add("predicted", "(3,4,5;8,7,6;9)", pb.predicted.to_string(), pb.predicted == parse_betti("(3,4,5;8,7,6;9)"));
  construction("diag(u,v,w) K(x,y^2,z^3)", {sort_graded(pb.matrix), pb.predicted, "prop_bet"}, ch, digest);
}

const std::map<std::string, std::function<void(const JobSpec&, Checks&, std::string&)>>& table() {
  static const std::map<std::string, std::function<void(const JobSpec&, Checks&, std::string&)>> t{
      {"intro", [](auto&, auto& ch, auto& d) { intro(ch, d); }},
      {"example-I", [](auto&, auto& ch, auto& d) { resolve_fixture("example-I", ch, d); }},
      {"example-J", [](auto&, auto& ch, auto& d) { resolve_fixture("example-J", ch, d); }},
      {"gaeta-remark", [](auto&, auto& ch, auto& d) { gaeta_remark(ch, d); }},
      {"closing-remark", [](auto& s, auto& ch, auto& d) { closing_remark(s, ch, d); }},
      {"prop-bet", [](auto&, auto& ch, auto& d) { prop_bet_example(ch, d); }},
      {"homogeneous", [](auto&, auto& ch, auto& d) {
         construction("(3^5;4^5;5)", homogeneous_matrix(5, 3, 4), ch, d);
       }},
      {"no-gaeta", [](auto&, auto& ch, auto& d) {
         construction("(2,2,2,3;4,3,3,3;4)", realize(parse_betti("(2,2,2,3;4,3,3,3;4)")), ch, d);
       }},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& scenarios() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : table()) out.push_back(k);
    return out;
  }();
  return names;
}

int run_scenario(const std::string& name, const JobSpec& spec, Json& result, std::string& digest_source) {
  auto it = table().find(name);
  if (it == table().end()) throw InputError("unknown scenario '" + name + "'");
  Checks ch;
  digest_source = "verify-paper-example " + name + "\n";
  it->second(spec, ch, digest_source);
  result["scenario"] = name;
  result["checks"] = ch.items;
  result["all_ok"] = ch.all_ok;
  return ch.all_ok ? Ok : Negative;
}

}  // namespace ggor::cli

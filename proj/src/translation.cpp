#include "symbreak/translation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symbreak/errors.hpp"

namespace symbreak::translation {

TauInvariantSet TauInvariantSet::full(int N) {
  TauInvariantSet s;
  for (int i = 1; i < N; ++i) s.indices.insert(i);
  return s;
}

bool can_translate_up(const RationalVec& tau, const RationalVec& taup, int i) {
  if (i < 1 || i > static_cast<int>(tau.size()))
    throw ShapeError("can_translate_up: index out of range");
  const Rational ti = tau[i - 1];
  for (const Rational& tj : taup)
    if (ti == tj - Rational(1, 2)) return false;
  return true;
}

bool can_translate_down(const RationalVec& tau, const RationalVec& taup, int i) {
  if (i < 1 || i > static_cast<int>(tau.size()))
    throw ShapeError("can_translate_down: index out of range");
  const Rational ti = tau[i - 1];
  for (const Rational& tj : taup)
    if (ti == tj + Rational(1, 2)) return false;
  return true;
}

bool operator==(const Fact& a, const Fact& b) {
  return a.group_pair == b.group_pair && a.D == b.D && a.lambda == b.lambda &&
         a.nu == b.nu && a.verdict == b.verdict &&
         a.eigenspaces_semisimple == b.eigenspaces_semisimple &&
         a.multiplicity_free == b.multiplicity_free;
}

Verdict stability_transport(const Fact& seed, const RationalVec& lambda) {
  if (!seed.verdict.decided())
    throw DomainError("stability_transport: seed verdict is Unknown");
  if (!seed.eigenspaces_semisimple)
    throw DomainError("stability_transport: seed lacks the eigenspace hypothesis");
  if (!seed.D)
    throw DomainError("stability_transport: seed carries no pattern");
  const patterns::InterleavingPattern& D = *seed.D;
  const RationalVec& xi = seed.lambda;
  const RationalVec& nu = seed.nu;
  if (lambda.size() != xi.size())
    throw ShapeError("stability_transport: lambda has wrong length");
  for (std::size_t i = 0; i + 1 < xi.size(); ++i)
    if (xi[i] - xi[i + 1] < Rational(1))
      throw DomainError("stability_transport: seed character violates xi_i - xi_{i+1} >= 1");
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (!(lambda[i] - xi[i]).is_integer())
      throw DomainError("stability_transport: lambda is not in xi + Z^n");
  if (!patterns::satisfies(D, patterns::ParamPoint{lambda, nu}))
    throw DomainError("stability_transport: (lambda, nu) does not satisfy the seed pattern");

  const std::vector<patterns::Step> walk = patterns::fence_walk(D, nu, xi, lambda);

  // Replay, re-checking translation legality at every step. Inside a strict
  // pattern region this always holds; a failure means an encoding bug.
  RationalVec cur = xi;
  for (const patterns::Step& st : walk) {
    const bool ok = st.sign > 0 ? can_translate_up(cur, nu, st.index)
                                : can_translate_down(cur, nu, st.index);
    if (!ok)
      throw InternalError("stability_transport: illegal step " + st.str() +
                          " at tau=" + vec_str(cur));
    cur[st.index - 1] += Rational(st.sign);
  }

  Verdict out = seed.verdict;
  Multiplicity value = seed.verdict.value;
  if (value == Multiplicity::NonZero && seed.multiplicity_free) value = Multiplicity::One;
  out.value = value;
  out.provenance.push_back(ProvenanceStep{
      TheoremTag::Thm2_7_Stability,
      "transport " + vec_str(xi) + " -> " + vec_str(lambda) + " inside " + patterns::to_text(D),
      walk});
  return out;
}

Verdict tau_vanish(const TauInvariantSet& tau_set, const patterns::InterleavingPattern& D) {
  if (!D.is_strict()) throw DomainError("tau_vanish requires a strict pattern");
  if (D.m != D.n - 1)
    throw ShapeError("tau_vanish: pattern must have shape (n, n-1)");
  for (int i : tau_set.indices) {
    if (i < 1 || i >= D.n)
      throw ShapeError("tau_vanish: tau-invariant index out of range");
    if (patterns::adjacent_string(D, i))
      return make_verdict(Multiplicity::Zero, TheoremTag::Thm2_11_Vanish,
                          "x" + std::to_string(i) + " x" + std::to_string(i + 1) +
                              " adjacent in " + patterns::to_text(D));
  }
  return unknown_verdict();
}

namespace {

nlohmann::json steps_to_json(const std::vector<patterns::Step>& walk) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : walk) arr.push_back(s.str());
  return arr;
}

std::vector<patterns::Step> steps_from_json(const nlohmann::json& arr) {
  std::vector<patterns::Step> out;
  for (const auto& e : arr) {
    const std::string s = e.get<std::string>();
    if (s.size() < 3 || (s[0] != '+' && s[0] != '-') || s[1] != 'f')
      throw DomainError("bad walk step '" + s + "'");
    out.push_back(patterns::Step{std::stoi(s.substr(2)), s[0] == '+' ? +1 : -1});
  }
  return out;
}

nlohmann::json rational_vec_to_json(const RationalVec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

RationalVec rational_vec_from_json(const nlohmann::json& arr) {
  RationalVec out;
  for (const auto& e : arr) out.push_back(Rational::parse(e.get<std::string>()));
  return out;
}

nlohmann::json verdict_to_json_obj(const Verdict& v) {
  nlohmann::json j;
  j["value"] = multiplicity_str(v.value);
  nlohmann::json prov = nlohmann::json::array();
  for (const auto& p : v.provenance) {
    nlohmann::json e;
    e["tag"] = tag_str(p.tag);
    e["citation"] = tag_citation(p.tag);
    e["detail"] = p.detail;
    if (!p.walk.empty()) e["walk"] = steps_to_json(p.walk);
    prov.push_back(e);
  }
  j["provenance"] = prov;
  return j;
}

Verdict verdict_from_json_obj(const nlohmann::json& j) {
  Verdict v;
  v.value = multiplicity_parse(j.at("value").get<std::string>());
  if (j.contains("provenance"))
    for (const auto& e : j.at("provenance")) {
      ProvenanceStep p{tag_parse(e.at("tag").get<std::string>()),
                       e.value("detail", std::string{}),
                       {}};
      if (e.contains("walk")) p.walk = steps_from_json(e.at("walk"));
      v.provenance.push_back(std::move(p));
    }
  return v;
}

// Classifies a verdict for collision detection.
enum class Claim { None, Zero, NonZero };

Claim claim_of(const Verdict& v) {
  switch (v.value) {
    case Multiplicity::Zero: return Claim::Zero;
    case Multiplicity::One:
    case Multiplicity::NonZero: return Claim::NonZero;
    case Multiplicity::Unknown: return Claim::None;
  }
  throw InternalError("unreachable multiplicity");
}

std::string fact_key(const Fact& f) {
  return f.group_pair + "|" + (f.D ? patterns::to_text(*f.D) : "") + "|" +
         vec_str(f.lambda) + "|" + vec_str(f.nu);
}

}  // namespace

std::string verdict_to_json(const Verdict& v) { return verdict_to_json_obj(v).dump(); }

Verdict verdict_from_json(const std::string& text) {
  return verdict_from_json_obj(nlohmann::json::parse(text));
}

std::string fact_to_json(const Fact& f) {
  nlohmann::json j;
  j["groupPair"] = f.group_pair;
  j["pattern"] = f.D ? nlohmann::json(patterns::to_text(*f.D)) : nlohmann::json(nullptr);
  j["lambda"] = rational_vec_to_json(f.lambda);
  j["nu"] = rational_vec_to_json(f.nu);
  const nlohmann::json v = verdict_to_json_obj(f.verdict);
  j["verdict"] = v.at("value");
  j["provenance"] = v.at("provenance");
  j["eigenspacesSemisimple"] = f.eigenspaces_semisimple;
  j["multiplicityFree"] = f.multiplicity_free;
  return j.dump();
}

Fact fact_from_json(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  Fact f;
  f.group_pair = j.at("groupPair").get<std::string>();
  if (j.contains("pattern") && !j.at("pattern").is_null())
    f.D = patterns::parse_pattern(j.at("pattern").get<std::string>());
  f.lambda = rational_vec_from_json(j.at("lambda"));
  f.nu = rational_vec_from_json(j.at("nu"));
  nlohmann::json v;
  v["value"] = j.at("verdict");
  v["provenance"] = j.value("provenance", nlohmann::json::array());
  f.verdict = verdict_from_json_obj(v);
  f.eigenspaces_semisimple = j.value("eigenspacesSemisimple", false);
  f.multiplicity_free = j.value("multiplicityFree", false);
  return f;
}

void FactStore::add(Fact f) {
  for (const Fact& g : facts_) {
    if (fact_key(g) == fact_key(f)) {
      const Claim a = claim_of(g.verdict), b = claim_of(f.verdict);
      if (a != Claim::None && b != Claim::None && a != b)
        throw ConsistencyError("contradictory facts for key " + fact_key(f) + ": " +
                               multiplicity_str(g.verdict.value) + " vs " +
                               multiplicity_str(f.verdict.value));
      if (g == f) return;  // duplicate
    }
  }
  facts_.push_back(std::move(f));
}

std::vector<const Fact*> FactStore::lookup(
    const std::string& group_pair,
    const std::optional<patterns::InterleavingPattern>& D) const {
  std::vector<const Fact*> out;
  for (const Fact& f : facts_) {
    if (f.group_pair != group_pair) continue;
    if (D && (!f.D || !(*f.D == *D))) continue;
    out.push_back(&f);
  }
  return out;
}

std::string FactStore::to_jsonl() const {
  std::string out;
  for (const Fact& f : facts_) {
    out += fact_to_json(f);
    out += '\n';
  }
  return out;
}

FactStore FactStore::from_jsonl(const std::string& text) {
  FactStore s;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    s.add(fact_from_json(line));
  }
  return s;
}

FactStore FactStore::merge(const FactStore& a, const FactStore& b) {
  FactStore out;
  std::map<std::string, Claim> claims;
  std::vector<std::string> offenders;
  for (const FactStore* s : {&a, &b}) {
    for (const Fact& f : s->facts()) {
      const std::string key = fact_key(f);
      const Claim c = claim_of(f.verdict);
      auto it = claims.find(key);
      if (it != claims.end() && c != Claim::None && it->second != Claim::None &&
          it->second != c)
        offenders.push_back(key);
      if (it == claims.end() || it->second == Claim::None) claims[key] = c;
    }
  }
  if (!offenders.empty()) {
    std::string msg = "Zero/NonZero collisions on merge:";
    for (const auto& k : offenders) msg += "\n  " + k;
    throw ConsistencyError(msg);
  }
  for (const Fact& f : a.facts()) out.add(f);
  for (const Fact& f : b.facts()) out.add(f);
  return out;
}

}  // namespace symbreak::translation

#include "symbreak/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symbreak/errors.hpp"
#include "symbreak/gl_symmetric.hpp"
#include "symbreak/pattern.hpp"
#include "symbreak/translation.hpp"
#include "symbreak/unitary_ds.hpp"
#include "symbreak/upq_symmetric.hpp"
#include "symbreak/weyl.hpp"

namespace symbreak::cli {

namespace {

using nlohmann::json;

json verdict_json(const translation::Verdict& v) {
  return json::parse(translation::verdict_to_json(v));
}

void print_verdict_text(std::ostream& out, const translation::Verdict& v) {
  out << "verdict " << translation::multiplicity_str(v.value) << "\n";
  for (const auto& p : v.provenance) {
    out << "  via " << translation::tag_str(p.tag) << " [" << translation::tag_citation(p.tag)
        << "]";
    if (!p.detail.empty()) out << ": " << p.detail;
    out << "\n";
    if (!p.walk.empty()) {
      out << "    walk:";
      for (const auto& s : p.walk) out << " " << s.str();
      out << "\n";
    }
  }
}

void emit_verdict(std::ostream& out, const std::string& format,
                  const translation::Verdict& v, json inputs_echo) {
  if (format == "json") {
    json j;
    j["inputs"] = std::move(inputs_echo);
    j["verdict"] = verdict_json(v);
    out << j.dump() << "\n";
  } else {
    print_verdict_text(out, v);
  }
}

std::vector<std::int64_t> to_ints(const RationalVec& v, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& r : v) {
    if (!r.is_integer()) throw DomainError(what + " must be integral, got " + r.str());
    out.push_back(r.numerator());
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Options {
  std::string format = "text";
  bool count_only = false;
  bool assume_he_complete = false;
  int n = 0, m = 0, ell = 0, k = 0, p = 0, q = 0, r = 0, s = 0, speh_m = 0;
  std::string x, y, xi, eta, lambda, nu, pattern, bound, facts_out;
  std::vector<std::string> files;
};

int dispatch(const std::string& path, const Options& o, std::ostream& out);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symbreak: interleaving-pattern calculus for symmetry breaking"};
  app.require_subcommand(0, 1);
  Options o;
  std::string invoked;

  auto add_leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                      const std::string& path,
                      const std::function<void(CLI::App*)>& flags) {
    CLI::App* c = parent->add_subcommand(name, desc);
    flags(c);
    c->callback([&invoked, path] { invoked = path; });
    return c;
  };

  auto fmt_flag = [&](CLI::App* c, bool with_csv = false) {
    c->add_option("--format", o.format,
                  with_csv ? "text, json, or csv" : "text or json")
        ->check(with_csv ? CLI::IsMember({"text", "json", "csv"})
                         : CLI::IsMember({"text", "json"}));
  };

  // patterns
  CLI::App* patterns_cmd = app.add_subcommand("patterns", "interleaving pattern combinatorics");
  patterns_cmd->require_subcommand(1);
  add_leaf(patterns_cmd, "enumerate", "list all strict patterns", "patterns/enumerate",
           [&](CLI::App* c) {
             c->add_option("--n", o.n)->required();
             c->add_option("--m", o.m)->required();
             c->add_flag("--count", o.count_only, "print only the count");
             fmt_flag(c);
           });
  add_leaf(patterns_cmd, "classify", "pattern realized by a point", "patterns/classify",
           [&](CLI::App* c) {
             c->add_option("--x", o.x)->required();
             c->add_option("--y", o.y, "may be empty");
             fmt_flag(c);
           });
  add_leaf(patterns_cmd, "fences", "fences of a strict pattern", "patterns/fences",
           [&](CLI::App* c) {
             c->add_option("--pattern", o.pattern)->required();
             fmt_flag(c);
           });

  // walk
  add_leaf(&app, "walk", "fence walk between two parameters", "walk", [&](CLI::App* c) {
    c->add_option("--pattern", o.pattern)->required();
    c->add_option("--nu", o.nu, "may be empty");
    c->add_option("--xi", o.xi)->required();
    c->add_option("--lambda", o.lambda)->required();
    fmt_flag(c);
  });

  // weyl
  CLI::App* weyl_cmd = app.add_subcommand("weyl", "compact branching U(n) down to U(n-1)");
  weyl_cmd->require_subcommand(1);
  add_leaf(weyl_cmd, "mult", "branching multiplicity", "weyl/mult", [&](CLI::App* c) {
    c->add_option("--x", o.x)->required();
    c->add_option("--y", o.y)->required();
    fmt_flag(c);
  });
  add_leaf(weyl_cmd, "oracle", "brute-force branching decomposition", "weyl/oracle",
           [&](CLI::App* c) {
             c->add_option("--x", o.x)->required();
             fmt_flag(c);
           });
  add_leaf(weyl_cmd, "dim", "Weyl dimension", "weyl/dim",
           [&](CLI::App* c) { c->add_option("--x", o.x)->required(); });

  // u21
  CLI::App* u21_cmd = app.add_subcommand("u21", "the (U(2,1), U(1,1)) table");
  u21_cmd->require_subcommand(1);
  add_leaf(u21_cmd, "query", "verdict for concrete parameters", "u21/query", [&](CLI::App* c) {
    c->add_option("--x", o.x, "x1,x2 (integers)")->required();
    c->add_option("--y", o.y, "y (integer)")->required();
    c->add_option("--xi", o.xi)->required();
    c->add_option("--eta", o.eta)->required();
    c->add_flag("--assume-he-complete", o.assume_he_complete);
    fmt_flag(c);
  });
  add_leaf(u21_cmd, "limit", "verdict for a one-equality weak pattern", "u21/limit",
           [&](CLI::App* c) {
             c->add_option("--pattern", o.pattern)->required();
             fmt_flag(c);
           });
  add_leaf(u21_cmd, "audit", "all 60 strict configurations", "u21/audit", [&](CLI::App* c) {
    c->add_flag("--assume-he-complete", o.assume_he_complete);
    fmt_flag(c, true);
  });

  // gl
  CLI::App* gl_cmd = app.add_subcommand("gl", "GL(n,R) symmetric-space families");
  gl_cmd->require_subcommand(1);
  add_leaf(gl_cmd, "mult", "multiplicity verdict", "gl/mult", [&](CLI::App* c) {
    c->add_option("--n", o.n)->required();
    c->add_option("--ell", o.ell)->required();
    c->add_option("--lambda", o.lambda)->required();
    c->add_option("--nu", o.nu)->required();
    fmt_flag(c);
  });
  add_leaf(gl_cmd, "ktype", "minimal K-type in Weyl notation", "gl/ktype", [&](CLI::App* c) {
    c->add_option("--n", o.n)->required();
    c->add_option("--ell", o.ell)->required();
    c->add_option("--lambda", o.lambda)->required();
    fmt_flag(c);
  });

  // speh
  CLI::App* speh_cmd = app.add_subcommand("speh", "degenerate family of GL(2m,R)");
  speh_cmd->require_subcommand(1);
  add_leaf(speh_cmd, "check", "seed from lambda and check the hypotheses", "speh/check",
           [&](CLI::App* c) {
             c->add_option("--m", o.speh_m, "consistency check against lambda length");
             c->add_option("--lambda", o.lambda)->required();
             fmt_flag(c);
           });
  add_leaf(speh_cmd, "seed", "print the seed parameters for lambda", "speh/seed",
           [&](CLI::App* c) {
             c->add_option("--lambda", o.lambda)->required();
             fmt_flag(c);
           });

  // upq
  CLI::App* upq_cmd = app.add_subcommand("upq", "U(p,q) symmetric-space families");
  upq_cmd->require_subcommand(1);
  add_leaf(upq_cmd, "ds", "enumerate discrete-series parameters", "upq/ds", [&](CLI::App* c) {
    c->add_option("--p", o.p)->required();
    c->add_option("--q", o.q)->required();
    c->add_option("--r", o.r)->required();
    c->add_option("--s", o.s)->required();
    c->add_option("--bound", o.bound)->required();
    fmt_flag(c);
  });
  add_leaf(upq_cmd, "mult", "multiplicity verdict", "upq/mult", [&](CLI::App* c) {
    c->add_option("--p", o.p)->required();
    c->add_option("--q", o.q)->required();
    c->add_option("--r", o.r)->required();
    c->add_option("--s", o.s)->required();
    c->add_option("--case", o.pattern, "pattern for both contexts, e.g. \"x>y\"")->required();
    c->add_option("--lambda", o.lambda, "x-part then y-part")->required();
    c->add_option("--nu", o.nu, "xi-part then eta-part")->required();
    fmt_flag(c);
  });

  // facts
  CLI::App* facts_cmd = app.add_subcommand("facts", "fact store maintenance");
  facts_cmd->require_subcommand(1);
  add_leaf(facts_cmd, "merge", "merge two JSON-lines stores", "facts/merge", [&](CLI::App* c) {
    c->add_option("files", o.files, "two store files")->expected(2);
    c->add_option("--out", o.facts_out, "output path (default stdout)");
  });

  std::vector<const char*> argv;
  argv.push_back("symbreak");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (invoked.empty()) {
    err << app.help();
    return kUsage;
  }

  try {
    return dispatch(invoked, o, out);
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::ios_base::failure& e) {
    err << "parse failure: " << e.what() << "\n";
    return kParseFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

namespace {

int dispatch(const std::string& path, const Options& o, std::ostream& out) {
  const bool as_json = o.format == "json";

  if (path == "patterns/enumerate") {
    const auto all = patterns::enumerate_strict(o.n, o.m);
    if (o.count_only) {
      out << all.size() << "\n";
    } else if (as_json) {
      json arr = json::array();
      for (const auto& D : all) arr.push_back(json::parse(patterns::to_json(D)));
      out << json{{"count", all.size()}, {"patterns", arr}}.dump() << "\n";
    } else {
      for (const auto& D : all) out << patterns::to_text(D) << "\n";
    }
    return kOk;
  }

  if (path == "patterns/classify") {
    const patterns::ParamPoint p{parse_vec(o.x), parse_vec(o.y)};
    const auto D = patterns::classify(p);
    out << (as_json ? patterns::to_json(D) : patterns::to_text(D)) << "\n";
    return kOk;
  }

  if (path == "patterns/fences") {
    const auto D = patterns::parse_pattern(o.pattern);
    const auto fs = patterns::fences(D);
    if (as_json) {
      json arr = json::array();
      for (const auto& f : fs) arr.push_back({{"x", f.x_index}, {"y", f.y_index}});
      out << arr.dump() << "\n";
    } else {
      for (const auto& f : fs)
        out << "x" << f.x_index << "=y" << f.y_index << "\n";
    }
    return kOk;
  }

  if (path == "walk") {
    const auto D = patterns::parse_pattern(o.pattern);
    const auto steps =
        patterns::fence_walk(D, parse_vec(o.nu), parse_vec(o.xi), parse_vec(o.lambda));
    if (as_json) {
      json arr = json::array();
      for (const auto& s : steps) arr.push_back(s.str());
      out << arr.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < steps.size(); ++i)
        out << (i ? " " : "") << steps[i].str();
      out << "\n";
    }
    return kOk;
  }

  if (path == "weyl/mult") {
    const auto x = weyl::validate_highest_weight(to_ints(parse_vec(o.x), "x"));
    const auto y = weyl::validate_highest_weight(to_ints(parse_vec(o.y), "y"));
    const int mult = weyl::weyl_mult(x, y);
    const auto v = translation::make_verdict(
        mult == 1 ? translation::Multiplicity::One : translation::Multiplicity::Zero,
        translation::TheoremTag::WeylLaw,
        mult == 1 ? "highest weights interlace" : "interlacing fails");
    emit_verdict(out, o.format, v, json{{"x", o.x}, {"y", o.y}});
    return kOk;
  }

  if (path == "weyl/oracle") {
    const auto x = weyl::validate_highest_weight(to_ints(parse_vec(o.x), "x"));
    const auto decomp = weyl::branch_oracle(x);
    if (as_json) {
      json arr = json::array();
      for (const auto& [y, mult] : decomp)
        arr.push_back({{"y", y.entries}, {"mult", mult}});
      out << json{{"x", x.entries}, {"branching", arr}}.dump() << "\n";
    } else {
      for (const auto& [y, mult] : decomp) {
        out << vec_str(RationalVec(y.entries.begin(), y.entries.end())) << ": " << mult
            << "\n";
      }
    }
    return kOk;
  }

  if (path == "weyl/dim") {
    const auto xs = to_ints(parse_vec(o.x), "x");
    const auto x = weyl::validate_highest_weight(xs);
    out << weyl::weyl_dim(x, static_cast<int>(xs.size())) << "\n";
    return kOk;
  }

  if (path == "u21/query") {
    const auto xs = to_ints(parse_vec(o.x), "x");
    if (xs.size() != 2) throw ShapeError("u21 query: --x needs two entries");
    const auto ys = to_ints(parse_vec(o.y), "y");
    if (ys.size() != 1) throw ShapeError("u21 query: --y needs one entry");
    const auto v = uds::u21_query(xs[0], xs[1], ys[0], Rational::parse(o.xi),
                                  Rational::parse(o.eta), o.assume_he_complete);
    emit_verdict(out, o.format, v,
                 json{{"x", o.x}, {"y", o.y}, {"xi", o.xi}, {"eta", o.eta}});
    return kOk;
  }

  if (path == "u21/limit") {
    const auto D = patterns::parse_pattern(o.pattern);
    emit_verdict(out, o.format, uds::u21_limit_query(D), json{{"pattern", o.pattern}});
    return kOk;
  }

  if (path == "u21/audit") {
    const auto rows = uds::u21_audit(o.assume_he_complete);
    if (o.format == "csv") {
      out << "delta,deltaPrime,pattern,verdict,provenance\n";
      for (const auto& r : rows) {
        std::string prov;
        for (const auto& p : r.verdict.provenance) {
          if (!prov.empty()) prov += "; ";
          prov += translation::tag_str(p.tag) + ": " + p.detail;
        }
        out << r.delta << "," << r.delta_prime << "," << csv_quote(patterns::to_text(r.pattern))
            << "," << translation::multiplicity_str(r.verdict.value) << "," << csv_quote(prov)
            << "\n";
      }
    } else if (as_json) {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"delta", r.delta},
                       {"deltaPrime", r.delta_prime},
                       {"pattern", json::parse(patterns::to_json(r.pattern))},
                       {"verdict", verdict_json(r.verdict)}});
      out << arr.dump() << "\n";
    } else {
      for (const auto& r : rows)
        out << r.delta << " | " << r.delta_prime << " | " << patterns::to_text(r.pattern)
            << " | " << translation::multiplicity_str(r.verdict.value) << "\n";
    }
    return kOk;
  }

  if (path == "gl/mult") {
    const auto v = glsym::gl_multiplicity(o.n, o.ell, to_ints(parse_vec(o.lambda), "lambda"),
                                          to_ints(parse_vec(o.nu), "nu"));
    emit_verdict(out, o.format, v,
                 json{{"n", o.n}, {"ell", o.ell}, {"lambda", o.lambda}, {"nu", o.nu}});
    return kOk;
  }

  if (path == "gl/ktype") {
    const auto p = glsym::validate_pi_ell(o.n, o.ell, to_ints(parse_vec(o.lambda), "lambda"));
    const auto kt = glsym::min_ktype_pi_ell(p);
    if (as_json) {
      out << json{{"entries", kt.label.entries},
                  {"type", kt.label.type == glsym::WeylOLabel::Type::I ? "I" : "II"},
                  {"splitsOnSO", kt.splits_on_so}}
                 .dump()
          << "\n";
    } else {
      out << vec_str(RationalVec(kt.label.entries.begin(), kt.label.entries.end()))
          << "  [Type " << (kt.label.type == glsym::WeylOLabel::Type::I ? "I" : "II") << "]"
          << (kt.splits_on_so ? "  splits into two SO(n) irreducibles" : "") << "\n";
    }
    return kOk;
  }

  if (path == "speh/check" || path == "speh/seed") {
    const auto lambda = parse_vec(o.lambda);
    if (o.speh_m > 0 && static_cast<int>(lambda.size()) != 2 * o.speh_m)
      throw ShapeError("speh: --lambda must have 2m entries");
    const auto seed = glsym::speh_seed(lambda);
    RationalVec nu = seed.nu_prime;
    nu.push_back(seed.nu_m);
    nu.insert(nu.end(), seed.nu_dprime.begin(), seed.nu_dprime.end());
    if (path == "speh/seed") {
      if (as_json) {
        out << json{{"m", seed.m},
                    {"eps", seed.eps.str()},
                    {"lambda", o.lambda},
                    {"nu", vec_str(nu)},
                    {"kappa", seed.kappa}}
                   .dump()
            << "\n";
      } else {
        out << "m " << seed.m << "\neps " << seed.eps.str() << "\nnu " << vec_str(nu)
            << "\nkappa " << seed.kappa << "\n";
      }
      return kOk;
    }
    emit_verdict(out, o.format, glsym::speh_check(seed),
                 json{{"lambda", o.lambda}, {"nu", vec_str(nu)}, {"kappa", seed.kappa}});
    return kOk;
  }

  if (path == "upq/ds") {
    const auto entries = upqsym::disc_upq_sym_enumerate(o.p, o.q, o.r, o.s,
                                                        Rational::parse(o.bound));
    if (as_json) {
      json arr = json::array();
      for (const auto& e : entries)
        arr.push_back({{"pattern", json::parse(patterns::to_json(e.D))},
                       {"x", vec_str(e.lambda.x)},
                       {"y", vec_str(e.lambda.y)},
                       {"goodRange", e.good_range}});
      out << arr.dump() << "\n";
    } else {
      for (const auto& e : entries)
        out << patterns::to_text(e.D) << " | x=(" << vec_str(e.lambda.x) << ") y=("
            << vec_str(e.lambda.y) << ")" << (e.good_range ? "" : "  [may vanish]") << "\n";
    }
    return kOk;
  }

  if (path == "upq/mult") {
    const auto D = patterns::parse_pattern(o.pattern);
    const auto ctx = upqsym::make_context(o.p, o.q, o.r, o.s, D);
    const auto ctxp = upqsym::make_context(o.p - 1, o.q, o.r, o.s, D);
    const auto lam = parse_vec(o.lambda);
    const auto nuv = parse_vec(o.nu);
    if (static_cast<int>(lam.size()) != o.r + o.s || static_cast<int>(nuv.size()) != o.r + o.s)
      throw ShapeError("upq mult: --lambda and --nu need r+s entries");
    const patterns::ParamPoint lambda{RationalVec(lam.begin(), lam.begin() + o.r),
                                      RationalVec(lam.begin() + o.r, lam.end())};
    const patterns::ParamPoint nu{RationalVec(nuv.begin(), nuv.begin() + o.r),
                                  RationalVec(nuv.begin() + o.r, nuv.end())};
    emit_verdict(out, o.format, upqsym::upq_sym_multiplicity(ctx, ctxp, lambda, nu),
                 json{{"p", o.p},
                      {"q", o.q},
                      {"r", o.r},
                      {"s", o.s},
                      {"case", o.pattern},
                      {"lambda", o.lambda},
                      {"nu", o.nu}});
    return kOk;
  }

  if (path == "facts/merge") {
    auto load = [](const std::string& file) {
      std::ifstream in(file);
      if (!in) throw std::ios_base::failure("cannot open " + file);
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        return translation::FactStore::from_jsonl(ss.str());
      } catch (const ConsistencyError&) {
        throw;
      } catch (const std::exception& e) {
        throw std::ios_base::failure("cannot parse " + file + ": " + e.what());
      }
    };
    const auto merged = translation::FactStore::merge(load(o.files[0]), load(o.files[1]));
    if (o.facts_out.empty()) {
      out << merged.to_jsonl();
    } else {
      std::ofstream of(o.facts_out);
      of << merged.to_jsonl();
    }
    return kOk;
  }

  throw InternalError("unhandled verb " + path);
}

}  // namespace

}  // namespace symbreak::cli

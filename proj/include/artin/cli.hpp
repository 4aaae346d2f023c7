#pragma once

// Command-line front end. `run` takes the full argv (program name first) and
// writes results to `out` and diagnostics to `err`, so tests can drive it
// without a subprocess.
//
// Exit codes: 0 success, 1 domain error (bad graph or word, non-spherical
// input, failed check), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "artin/coxgraph.hpp"
#include "artin/error.hpp"
#include "artin/garside.hpp"
#include "artin/invariants.hpp"
#include "artin/verify.hpp"

namespace artin::cli {

using json = nlohmann::ordered_json;

namespace detail {

inline CoxeterGraph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return CoxeterGraph::parse(buf.str());
  } catch (const ParseError &e) {
    throw DomainError(path + ": " + e.what());
  }
}

inline json names_json(const CoxeterGraph &g, const std::vector<int> &indices) {
  json arr = json::array();
  for (int i : indices)
    arr.push_back(g.name(i));
  return arr;
}

inline std::string braces(const CoxeterGraph &g, const std::vector<int> &indices) {
  std::string s = "{";
  for (std::size_t i = 0; i < indices.size(); ++i)
    s += (i ? ", " : "") + g.name(indices[i]);
  return s + "}";
}

inline json factors_json(const Garside &gs, const NormalForm &nf) {
  json arr = json::array();
  for (const auto &x : nf.factors) {
    json f = json::array();
    for (int s : gs.roots().reduced_word(x))
      f.push_back(gs.graph().name(s));
    arr.push_back(f);
  }
  return arr;
}

inline std::string factors_text(const Garside &gs, const NormalForm &nf) {
  std::string s;
  for (const auto &x : nf.factors)
    s += (s.empty() ? "[" : " [") + format_word(gs.graph(), gs.roots().reduced_word(x)) + "]";
  return s.empty() ? "(none)" : s;
}

inline std::string spelled(const Garside &gs, const NormalForm &nf) {
  auto w = gs.spelling(nf);
  return w.empty() ? std::string("1") : format_word(gs.graph(), w);
}

inline json profile_json(const ComponentProfile &c) {
  return json{{"type", family_name(c.type.family)},
              {"param", c.type.param},
              {"cd", c.invariants.cd},
              {"mf", c.invariants.mf},
              {"rkAb", c.invariants.rkAb}};
}

} // namespace detail

inline int run(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact computations in spherical-type Artin groups", "artin"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document");

  std::string graph_path, graph_path2, word1, word2;
  std::optional<std::string> opt_word;

  auto *classify_cmd = app.add_subcommand("classify", "component types of a Coxeter graph");
  classify_cmd->add_option("graph", graph_path)->required();

  auto *inv_cmd = app.add_subcommand("invariants", "cd, mf, rkAb and rkZ of a spherical Artin group");
  inv_cmd->add_option("graph", graph_path)->required();

  auto *iso_cmd = app.add_subcommand("iso", "decide whether two spherical Artin groups are isomorphic");
  iso_cmd->add_option("graph1", graph_path)->required();
  iso_cmd->add_option("graph2", graph_path2)->required();

  auto *nf_cmd = app.add_subcommand("nf", "left-greedy normal form of a positive word");
  nf_cmd->add_option("graph", graph_path)->required();
  nf_cmd->add_option("word", word1, "positive word, e.g. \"s t s\"")->required();

  auto *charney_cmd = app.add_subcommand("charney", "Charney form b c^-1 of a word");
  charney_cmd->add_option("graph", graph_path)->required();
  charney_cmd->add_option("word", word1)->required();

  auto *eq_cmd = app.add_subcommand("eq", "word problem: do two words define the same element");
  eq_cmd->add_option("graph", graph_path)->required();
  eq_cmd->add_option("word1", word1)->required();
  eq_cmd->add_option("word2", word2)->required();

  auto *delta_cmd = app.add_subcommand("delta", "Garside element, or the form Delta^-k p of a word");
  delta_cmd->add_option("graph", graph_path)->required();
  delta_cmd->add_option("word", opt_word);

  auto *mu_cmd = app.add_subcommand("mu", "the permutation mu(s) = Delta s Delta^-1");
  mu_cmd->add_option("graph", graph_path)->required();

  auto *power_cmd = app.add_subcommand("power-check", "check the Coxeter element power identity");
  power_cmd->add_option("graph", graph_path)->required();
  power_cmd->add_option("ordering", opt_word, "each generator once, e.g. \"s2 s1 s3\"");

  std::string suite;
  std::uint64_t seed = verify::kDefaultSeed;
  auto *verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--seed", seed, "random seed");

  std::vector<const char *> cargv;
  for (const auto &a : argv)
    cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "artin: usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (classify_cmd->parsed()) {
      const CoxeterGraph g = detail::load_graph(graph_path);
      const auto comps = classify_components(g);
      if (as_json) {
        json arr = json::array();
        for (const auto &c : comps)
          arr.push_back(json{{"type", family_name(c.type.family)},
                             {"param", c.type.param},
                             {"vertices", detail::names_json(g, c.indices)}});
        out << json{{"components", arr}}.dump() << "\n";
      } else {
        for (const auto &c : comps)
          out << c.type.name() << " " << detail::braces(g, c.indices) << "\n";
      }
      return 0;
    }

    if (inv_cmd->parsed()) {
      const CoxeterGraph g = detail::load_graph(graph_path);
      const auto profile = component_profile(g);
      if (as_json) {
        json arr = json::array();
        for (const auto &c : profile) {
          json j = detail::profile_json(c);
          j["vertices"] = c.vertices;
          arr.push_back(j);
        }
        out << json{{"cd", cd(g)}, {"rkAb", rkAb(g)}, {"rkZ", rkZ(g)}, {"components", arr}}.dump() << "\n";
      } else {
        out << "cd = " << cd(g) << "\nrkAb = " << rkAb(g) << "\nrkZ = " << rkZ(g) << "\n";
        for (const auto &c : profile) {
          std::string vs;
          for (const auto &v : c.vertices)
            vs += (vs.empty() ? "" : ", ") + v;
          out << c.type.name() << " {" << vs << "}: cd = " << c.invariants.cd << ", mf = " << c.invariants.mf
              << ", rkAb = " << c.invariants.rkAb << "\n";
        }
      }
      return 0;
    }

    if (iso_cmd->parsed()) {
      const IsoDecision d = decide_iso(detail::load_graph(graph_path), detail::load_graph(graph_path2));
      if (as_json) {
        json left = json::array(), right = json::array();
        for (const auto &c : d.left)
          left.push_back(detail::profile_json(c));
        for (const auto &c : d.right)
          right.push_back(detail::profile_json(c));
        out << json{{"isomorphic", d.isomorphic},
                    {"left", left},
                    {"right", right},
                    {"rkZ", json::array({d.rkZ_left, d.rkZ_right})}}
                   .dump()
            << "\n";
      } else {
        out << "isomorphic: " << (d.isomorphic ? "true" : "false") << "\n" << d.explanation << "\n";
      }
      return 0;
    }

    if (nf_cmd->parsed()) {
      const CoxeterGraph g = detail::load_graph(graph_path);
      Garside gs(g);
      const ArtinWord w = parse_word(g, word1);
      if (!is_positive(w))
        throw DomainError("nf expects a positive word; use 'delta' or 'charney' for group elements");
      const NormalForm nf = gs.normal_form(w);
      if (as_json)
        out << json{{"k", nf.k}, {"factors", detail::factors_json(gs, nf)}, {"word", detail::spelled(gs, nf)}}.dump()
            << "\n";
      else
        out << "Delta^" << nf.k << " " << detail::factors_text(gs, nf) << "\n" << detail::spelled(gs, nf) << "\n";
      return 0;
    }

    if (charney_cmd->parsed()) {
      const CoxeterGraph g = detail::load_graph(graph_path);
      Garside gs(g);
      const CharneyPair cp = gs.charney(parse_word(g, word1));
      if (as_json)
        out << json{{"b", detail::spelled(gs, cp.b)}, {"c", detail::spelled(gs, cp.c)}}.dump() << "\n";
      else
        out << "b = " << detail::spelled(gs, cp.b) << "\nc = " << detail::spelled(gs, cp.c) << "\n";
      return 0;
    }

    if (eq_cmd->parsed()) {
      const CoxeterGraph g = detail::load_graph(graph_path);
      Garside gs(g);
      const bool equal = gs.equals(parse_word(g, word1), parse_word(g, word2));
      if (as_json)
        out << json{{"equal", equal}}.dump() << "\n";
      else
        out << (equal ? "true" : "false") << "\n";
      return 0;
    }

    if (delta_cmd->parsed()) {
      const CoxeterGraph g = detail::load_graph(graph_path);
      Garside gs(g);
      if (!opt_word) {
        const auto word = format_word(g, gs.delta_word(1));
        const int len = gs.roots().length(gs.delta());
        if (as_json)
          out << json{{"delta", word}, {"length", len}}.dump() << "\n";
        else
          out << "Delta = " << word << "\nlength = " << len << "\n";
      } else {
        const DeltaForm df = gs.delta_form(parse_word(g, *opt_word));
        if (as_json)
          out << json{{"k", df.k}, {"p", detail::spelled(gs, df.p)}}.dump() << "\n";
        else
          out << "k = " << df.k << "\np = " << detail::spelled(gs, df.p) << "\n";
      }
      return 0;
    }

    if (mu_cmd->parsed()) {
      const CoxeterGraph g = detail::load_graph(graph_path);
      Garside gs(g);
      std::optional<int> e;
      if (is_connected(g))
        e = gs.center_exponent();
      if (as_json) {
        json m = json::object();
        for (int s = 0; s < gs.rank(); ++s)
          m[g.name(s)] = g.name(gs.mu(s));
        json j{{"mu", m}, {"identity", gs.mu_is_identity()}};
        j["center_exponent"] = e ? json(*e) : json(nullptr);
        out << j.dump() << "\n";
      } else {
        for (int s = 0; s < gs.rank(); ++s)
          out << g.name(s) << " -> " << g.name(gs.mu(s)) << "\n";
        out << "mu " << (gs.mu_is_identity() ? "= Id" : "!= Id") << "\n";
        if (e)
          out << "delta = Delta^" << *e << "\n";
      }
      return 0;
    }

    if (power_cmd->parsed()) {
      const CoxeterGraph g = detail::load_graph(graph_path);
      if (!is_connected(g))
        throw DomainError("power-check needs a connected graph");
      Garside gs(g);
      std::vector<int> ordering;
      if (opt_word) {
        const ArtinWord w = parse_word(g, *opt_word);
        if (!is_positive(w))
          throw DomainError("ordering must list generators without exponents");
        ordering = to_positive(w);
        std::vector<int> sorted = ordering;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
            static_cast<int>(sorted.size()) != gs.rank())
          throw DomainError("ordering must name every generator exactly once");
      } else {
        ordering = verify::all_gens(g);
      }
      const int h = classify(g)->coxeter_number();
      const std::string claim = gs.mu_is_identity() ? "pi^" + std::to_string(h / 2) + " = Delta"
                                                    : "pi^" + std::to_string(h) + " = Delta^2";
      const bool holds = gs.power_check_coxeter_element(ordering);
      const std::string pi = format_word(g, ordering);
      if (as_json)
        out << json{{"pi", pi}, {"h", h}, {"claim", claim}, {"holds", holds}}.dump() << "\n";
      else
        out << "pi = " << pi << "\nh = " << h << "\n" << claim << ": " << (holds ? "holds" : "FAILS") << "\n";
      return holds ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      const verify::Report r = verify::run_suite(suite, seed);
      if (as_json) {
        json checks = json::array();
        for (const auto &c : r.checks)
          checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out << json{{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}}.dump()
            << "\n";
      } else {
        out << r.to_text();
      }
      return r.passed() ? 0 : 1;
    }
  } catch (const DomainError &e) {
    err << "artin: error: " << e.what() << "\n";
    return 1;
  }
  err << "artin: usage error: no command\n";
  return 2;
}

inline int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

} // namespace artin::cli

/*
   Copyright 2026 The polyrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// polyrep: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 inconclusive or over
// budget, 3 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyrep/bifun.hpp"
#include "polyrep/daytensor.hpp"
#include "polyrep/errors.hpp"
#include "polyrep/functor_expr.hpp"
#include "polyrep/homology.hpp"
#include "polyrep/modkit.hpp"
#include "polyrep/parser.hpp"
#include "polyrep/suites.hpp"
#include "polyrep/symbridge.hpp"

using namespace polyrep;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInconclusive = 2, kUsage = 3 };

struct Globals {
  unsigned p = 2;
  std::optional<int> n;
  int r = 1;
  std::optional<int> cap;
  std::optional<std::size_t> max_dim;
  std::string cache_dir;
  bool json = false;
  bool csv = false;
  bool quiet = false;
  std::uint64_t seed = 1;
  std::string out;
};

Globals g;

void write_atomic(const std::string& path, const std::string& text) {
  std::filesystem::path dst(path);
  auto tmp = dst;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + path);
    f << text;
  }
  std::filesystem::rename(tmp, dst);
}

void emit(const std::string& text) {
  std::string t = text;
  if (t.empty() || t.back() != '\n') t += '\n';
  std::cout << t;
  if (!g.out.empty()) write_atomic(g.out, t);
}

void note(const std::string& text) {
  if (!g.quiet) std::cerr << text << "\n";
}

int exit_of(Status s) {
  switch (s) {
    case Status::Verified: return kOk;
    case Status::Failed: return kFailed;
    case Status::Inconclusive: return kInconclusive;
  }
  return kFailed;
}

int expr_degree(const Expr& e) {
  auto ds = degrees(e, g.p);
  int d = 0;
  for (int x : ds) d = std::max(d, x);
  return d;
}

RepContext context_for(int degree) { return RepContext(g.p, g.n.value_or(std::max(degree, 1))); }

PolyRepPtr build_expr(const std::string& text, std::optional<RepContext> ctx = {}) {
  auto e = parse_expr(text);
  RepContext c = ctx ? *ctx : context_for(expr_degree(*e));
  return build(*e, c);
}

json factors_json(const Factors& fs, const PolyRep& m) {
  json j = json::object();
  if (m.layout().blocks.size() == 1) {
    for (auto& [lam, k] : as_partitions(fs, m.coords())) j["L(" + lam.to_string() + ")"] = k;
  } else {
    for (auto& [w, k] : fs) j[simple_label(w, m.layout())] = k;
  }
  return j;
}

json summary(const PolyRep& m) {
  return {{"label", m.label()}, {"p", m.field().p()}, {"n", m.coords()},
          {"degree", m.degree()}, {"dim", m.dim()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial representations of GL_n over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", g.p, "characteristic")->check(CLI::Range(2u, 251u));
  app.add_option("--n", g.n, "number of coordinates (default: the degree)");
  app.add_option("--r", g.r, "twist exponent")->check(CLI::Range(0, 8));
  app.add_option("--cap", g.cap, "search cap for p and i");
  app.add_option("--max-dim", g.max_dim, "largest resolution term dimension");
  app.add_option("--cache-dir", g.cache_dir, "resolution cache (default $POLYREP_CACHE)");
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_flag("--quiet", g.quiet, "no progress on stderr");
  app.add_option("--seed", g.seed, "seed for randomized isomorphism search");
  app.add_option("--out", g.out, "also write the primary output to this file");

  std::string expr, source, target, partition, kind = "i", detect = "T", method = "general",
                                               suite, table_suite = "prop65";
  int kmax = 2;
  std::optional<int> dmax;
  bool dot = false, list = false;

  auto* build_cmd = app.add_subcommand("build", "build a functor and print it");
  build_cmd->add_option("--expr,expr", expr)->required();

  auto* hom_cmd = app.add_subcommand("hom", "dimension of hom(source, target)");
  hom_cmd->add_option("--source", source)->required();
  hom_cmd->add_option("--target", target)->required();

  auto* ext_cmd = app.add_subcommand("ext", "dimensions of Ext^k(source, target)");
  ext_cmd->add_option("--source", source)->required();
  ext_cmd->add_option("--target", target)->required();
  ext_cmd->add_option("--k", kmax, "highest degree")->check(CLI::Range(0, 32));

  auto* simple_cmd = app.add_subcommand("simple", "the simple functor L_lambda");
  simple_cmd->add_option("--partition,partition", partition)->required();

  auto* socle_cmd = app.add_subcommand("socle-series", "socle layers");
  socle_cmd->add_option("--expr,expr", expr)->required();
  socle_cmd->add_flag("--dot", dot, "print the diagram as an edge list");

  auto* factors_cmd = app.add_subcommand("factors", "composition factors");
  factors_cmd->add_option("--expr,expr", expr)->required();

  auto* inv_cmd = app.add_subcommand("invariant", "the invariants p(F,r) and i(F,r)");
  inv_cmd->add_option("--kind", kind)->check(CLI::IsMember({"i", "p"}));
  inv_cmd->add_option("--expr,expr", expr)->required();
  inv_cmd->add_option("--target", detect)->check(CLI::IsMember({"T", "L"}));

  auto* schur_cmd = app.add_subcommand("schur", "the Schur functor image, a kS_d-module");
  schur_cmd->add_option("--expr,expr", expr)->required();

  auto* mull_cmd = app.add_subcommand("mullineux", "Mullineux image of a p-restricted partition");
  mull_cmd->add_option("--partition,partition", partition)->required();

  auto* intern_cmd = app.add_subcommand("intern", "internal tensor product");
  intern_cmd->add_option("--left", source)->required();
  intern_cmd->add_option("--right", target);
  intern_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"general", "hom", "tensorpower", "wedge", "Q"}));

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite);
  verify_cmd->add_option("--dmax", dmax, "degree bound for enumerating suites");
  verify_cmd->add_flag("--list", list, "list the suites");

  auto* table_cmd = app.add_subcommand("table", "invariant table");
  table_cmd->add_option("--suite", table_suite)->check(CLI::IsMember({"prop65", "prop65-table"}));
  table_cmd->add_option("--target", detect)->check(CLI::IsMember({"T", "L"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!g.cache_dir.empty()) set_cache_dir(std::filesystem::path(g.cache_dir));
    if (g.max_dim) set_max_term_dim(*g.max_dim);
    const DetectTarget dt = detect == "L" ? DetectTarget::L : DetectTarget::T;

    if (*build_cmd) {
      auto m = build_expr(expr);
      emit(g.json ? summary(*m).dump(2) : serialize(*m));
      return kOk;
    }
    if (*hom_cmd || *ext_cmd) {
      auto es = parse_expr(source), et = parse_expr(target);
      auto ctx = context_for(std::max(expr_degree(*es), expr_degree(*et)));
      auto a = build(*es, ctx), b = build(*et, ctx);
      if (*hom_cmd) {
        emit(json{{"dim", hom_dim(*a, *b)}}.dump());
      } else {
        emit(json{{"ext", ext_dims(a, b, kmax)}}.dump());
      }
      return kOk;
    }
    if (*simple_cmd) {
      Partition lam = parse_partition(partition);
      auto m = simple_module(lam, context_for(lam.weight()));
      emit(g.json ? summary(*m).dump(2) : serialize(*m));
      return kOk;
    }
    if (*socle_cmd) {
      auto m = build_expr(expr);
      if (dot) {
        emit(diagram_edges(module_diagram(m), m->coords()));
        return kOk;
      }
      json layers = json::array();
      for (auto& f : socle_layers(m)) layers.push_back(factors_json(f, *m));
      emit(json{{"layers", layers}}.dump(g.json ? 2 : -1));
      return kOk;
    }
    if (*factors_cmd) {
      auto m = build_expr(expr);
      emit(json{{"factors", factors_json(composition_factors(m), *m)}}.dump(g.json ? 2 : -1));
      return kOk;
    }
    if (*inv_cmd) {
      auto m = build_expr(expr);
      auto v = kind == "i" ? invariant_i(m, g.r, g.cap, dt) : invariant_p(m, g.r, g.cap, dt);
      emit(v.to_json().dump());
      return v.kind == InvariantValue::Kind::AtLeast ? kInconclusive : kOk;
    }
    if (*schur_cmd) {
      auto m = build_expr(expr);
      SymRep s = schur_functor(*m);
      emit(g.json ? to_json(s).dump() : serialize(s));
      return kOk;
    }
    if (*mull_cmd) {
      Partition mu = parse_partition(partition);
      emit(json{{"mullineux", mullineux(mu, FieldSpec(g.p)).to_string()}}.dump());
      return kOk;
    }
    if (*intern_cmd) {
      auto a = build_expr(source);
      PolyRep res;
      if (method == "tensorpower") {
        res = internal_with_tensorpower(*a);
      } else if (method == "wedge") {
        res = internal_with_wedge(*a);
      } else if (method == "Q") {
        res = internal_with_Q(*a);
      } else {
        if (target.empty()) throw InvalidArgument("--right is required for method " + method);
        auto b = build_expr(target, a->ctx());
        res = method == "hom" ? internal_hom(*a, *b) : internal_general(*a, *b);
      }
      if (!g.json) {
        emit(serialize(res));
      } else {
        json j = summary(res);
        if (res.dim() > 0 && res.coords() >= res.degree())
          j["factors"] = factors_json(composition_factors(share(res)), res);
        emit(j.dump(2));
      }
      return kOk;
    }
    if (*verify_cmd) {
      if (list) {
        std::ostringstream o;
        for (auto& s : suite_registry()) o << s.name << "\t" << s.summary << "\n";
        emit(o.str());
        return kOk;
      }
      if (suite.empty()) throw InvalidArgument("verify needs a suite name (see --list)");
      SuiteConfig cfg;
      cfg.p = g.p;
      cfg.n = g.n;
      cfg.r = g.r;
      cfg.cap = g.cap;
      cfg.dmax = dmax;
      cfg.seed = g.seed;
      auto res = run_suite(suite, cfg);
      const Status s = res.report.status();
      std::size_t failed = 0, open = 0;
      for (auto& i : res.report.instances) {
        if (i.status == Status::Failed) ++failed;
        if (i.status == Status::Inconclusive) ++open;
      }
      emit(res.report.to_json().dump(2));
      note(suite + ": " + std::to_string(res.report.instances.size()) + " instances, " +
           std::to_string(failed) + " failed, " + std::to_string(open) + " inconclusive");
      return exit_of(s);
    }
    if (*table_cmd) {
      if (g.p != 2) throw InvalidArgument("the degree-4 table is defined at p = 2");
      auto t = invariant_table(g.n.value_or(4), g.cap, dt);
      emit(g.json ? t.to_json().dump(2) : t.to_csv());
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "over budget: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

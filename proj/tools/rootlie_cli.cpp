// rootlie: exact Hall-number / root-category Lie algebra toolkit.
//
// Subcommands: roots, indecs, hall, lie-table, verify. All output is plain
// structured text with stable ordering, so runs are byte-reproducible.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "rootlie/affine.hpp"
#include "rootlie/bgp.hpp"
#include "rootlie/cache.hpp"
#include "rootlie/io.hpp"
#include "rootlie/rootcat.hpp"
#include "rootlie/serre.hpp"
#include "rootlie/verify.hpp"

using namespace rootlie;

namespace {

std::shared_ptr<const Quiver> load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open quiver file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return std::make_shared<Quiver>(parse_quiver_text(ss.str()));
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

int tame_default_bound(const HallContext& ctx, int bound) {
  if (ctx.type() == QuiverType::Finite) return 0;
  return bound > 0 ? bound : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hall numbers and the root-category Lie algebra"};
  app.require_subcommand(1);

  std::string quiver_path, out_path, cache_dir;
  std::vector<int> primes;
  int bound = 0;
  app.add_option("--quiver", quiver_path, "quiver file")->required();
  app.add_option("--out", out_path, "write output here instead of stdout");
  app.add_option("--primes", primes, "override the interpolation primes");
  app.add_option("--bound", bound, "height bound (roots, tame tables)");
  app.add_option("--cache-dir", cache_dir,
                 "Hall polynomial cache directory (or ROOTLIE_CACHE_DIR)");

  auto* cmd_roots = app.add_subcommand("roots", "enumerate the root system");
  auto* cmd_indecs = app.add_subcommand(
      "indecs", "enumerate indecomposables of one dimension vector");
  std::string dim_str_opt;
  int prime = 2;
  cmd_indecs->add_option("--dim", dim_str_opt, "dimension vector d1,d2,...")
      ->required();
  cmd_indecs->add_option("--prime", prime, "field characteristic");
  auto* cmd_hall = app.add_subcommand("hall", "interpolate a Hall polynomial");
  std::string target_s, quot_s, sub_s;
  cmd_hall->add_option("--target", target_s, "target class label")->required();
  cmd_hall->add_option("--quot", quot_s, "quotient class label")->required();
  cmd_hall->add_option("--sub", sub_s, "submodule class label")->required();
  auto* cmd_table = app.add_subcommand("lie-table", "assemble the Lie table");
  auto* cmd_verify =
      app.add_subcommand("verify", "run a verification suite, exit nonzero "
                                   "on any violation");
  std::string suite;
  cmd_verify
      ->add_option("--suite", suite,
                   "jacobi | serre | form | reflection | affine")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    auto q = load_quiver(quiver_path);
    HallContext ctx(q);
    if (!primes.empty()) ctx.set_ladder(primes);
    if (cache_dir.empty()) {
      const char* env = std::getenv("ROOTLIE_CACHE_DIR");
      if (env) cache_dir = env;
    }

    if (*cmd_roots) {
      RootSystem rs = enumerate_roots(*q, bound > 0 ? bound : 10);
      std::ostringstream os;
      os << "type " << type_name(rs.type) << "\n";
      if (rs.delta) os << "delta " << dim_str(*rs.delta) << "\n";
      os << "positive real roots (" << rs.positive_reals.size()
         << (rs.complete ? ", complete" : ", up to bound") << ")\n";
      for (const DimVector& r : rs.positive_reals)
        os << "  " << dim_str(r) << "\n";
      emit(out_path, os.str());
      return 0;
    }

    if (*cmd_indecs) {
      DimVector d = detail::parse_dim_list(dim_str_opt, q->n());
      std::ostringstream os;
      auto classes = ctx.indec_classes(d, PrimeField(prime));
      os << "indecomposable classes of " << dim_str(d) << " over F_" << prime
         << ": " << classes.size() << "\n";
      for (const auto& [lab, rep] : classes) os << "  " << lab.str() << "\n";
      emit(out_path, os.str());
      return 0;
    }

    if (*cmd_hall) {
      DimVector delta =
          ctx.type() == QuiverType::Affine ? *ctx.delta() : DimVector{};
      RootCatLabel target = parse_label(target_s, *q, delta);
      RootCatLabel quot = parse_label(quot_s, *q, delta);
      RootCatLabel sub = parse_label(sub_s, *q, delta);
      if (!target.is_module() || !quot.is_module() || !sub.is_module())
        throw std::runtime_error("hall: labels must be module classes");
      HallPolynomial h;
      if (!cache_dir.empty()) {
        CacheStore store(cache_dir, *q);
        h = store.get_or_compute(ctx, target.mod, quot.mod, sub.mod);
      } else {
        h = ctx.hall_polynomial(target.mod, quot.mod, sub.mod);
      }
      std::ostringstream os;
      os << "hall polynomial g^{" << label_str(h.target) << "}_{"
         << label_str(h.quot) << "," << label_str(h.sub) << "}\n";
      os << "  poly " << h.poly.str() << "\n";
      os << "  degree bound " << h.degree_bound << ", primes";
      for (int p : h.primes_used) os << " " << p;
      os << "\n  value at q=1: " << h.poly.eval(1).str() << "\n";
      emit(out_path, os.str());
      return 0;
    }

    if (*cmd_table) {
      LieTable t = assemble_lie_table(ctx, tame_default_bound(ctx, bound));
      emit(out_path, lie_table_export(t));
      return 0;
    }

    if (*cmd_verify) {
      std::ostringstream os;
      bool ok = true;
      if (suite == "jacobi") {
        LieTable t = assemble_lie_table(ctx, tame_default_bound(ctx, bound));
        JacobiReport r = verify_jacobi(t);
        os << jacobi_export(r);
        ok = r.violations == 0;
      } else if (suite == "serre") {
        LieTable t = assemble_lie_table(ctx, tame_default_bound(ctx, bound));
        CheckReport rep = verify_serre_relations(t);
        if (ctx.type() == QuiverType::Finite)
          for (const CheckLine& l : verify_presentation_match(t).lines)
            rep.lines.push_back(l);
        os << report_export(rep);
        ok = rep.all_pass();
      } else if (suite == "form") {
        LieTable t = assemble_lie_table(ctx, tame_default_bound(ctx, bound));
        CheckReport rep = verify_form_blocks(ctx, t);
        for (const CheckLine& l : verify_invariance(t).lines)
          rep.lines.push_back(l);
        int nsize = t.dim() - q->n();
        rep.add("n-block Gram rank " + std::to_string(nsize),
                gram_n_block_rank(t) == nsize);
        os << report_export(rep);
        ok = rep.all_pass();
      } else if (suite == "reflection") {
        CheckReport all;
        for (int a = 0; a < q->n(); ++a) {
          if (!q->is_source(a)) continue;
          auto qr = std::make_shared<Quiver>(q->reflect_at(a));
          HallContext ctxr(qr);
          ReflectionReport rr = verify_reflection_diagram(ctx, ctxr, a);
          for (const CheckLine& l : rr.checks.lines)
            all.add("source " + q->vertices()[a] + ": " + l.what, l.pass,
                    l.detail);
        }
        os << report_export(all);
        ok = all.all_pass();
      } else if (suite == "affine") {
        std::vector<int> ps = primes.empty() ? std::vector<int>{2, 3, 5}
                                             : primes;
        CheckReport rep = verify_affine_realization(ctx, bound > 0 ? bound : 2, ps);
        os << report_export(rep);
        ok = rep.all_pass();
      } else {
        throw std::runtime_error("unknown suite '" + suite + "'");
      }
      emit(out_path, os.str());
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

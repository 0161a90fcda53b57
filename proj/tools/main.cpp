// hilbzeta: semimodule trees, motivic Hilbert zeta functions and oracle checks.
//
// Exit codes: 0 ok, 2 invalid input or unsupported semigroup, 3 no stabilization,
// 4 method disagreement, 5 oracle mismatch, 6 budget exceeded, 7 internal error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hilbzeta/errors.hpp"
#include "render.hpp"

namespace {

using namespace hz;

struct RunConfig {
  std::vector<int> generators;
  int lmax = -1;
  std::vector<int> fields{2, 3};
  std::string format;
  int offset = 1;
  std::string output;
  bool homfly = false;
  bool check = false;
  std::uint64_t node_budget = CountOptions{}.node_budget;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoStabilization: return 3;
    case ErrorKind::MethodDisagreement: return 4;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::InterpolationBudgetExceeded: return 6;
    case ErrorKind::NotAnIdeal:
    case ErrorKind::NonTriangular:
    case ErrorKind::TruncationTooSmall: return 7;
    default: return 2;
  }
}

// Writes through a temporary file so a failed run never leaves a partial output.
void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(c.output);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    f << text;
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

render::Format resolve_format(const RunConfig& c) {
  std::string name = c.format;
  if (name.empty()) {
    const char* env = std::getenv("HILBZETA_FORMAT");
    name = env && *env ? env : "text";
  }
  auto f = render::parse_format(name);
  if (!f) throw Error(ErrorKind::InvalidArgument, "unknown format '" + name + "'");
  return *f;
}

SemigroupPtr semigroup_of(const RunConfig& c) {
  if (c.generators.empty()) throw Error(ErrorKind::EmptyGenerators, "--gens is required");
  return make_semigroup(c.generators);
}

int lmax_of(const RunConfig& c, const NumericalSemigroup& S) {
  if (c.lmax >= 0) return c.lmax;
  return 2 * S.delta() + S.max_generator();
}

int cmd_zeta(const RunConfig& c) {
  const auto fmt = resolve_format(c);
  auto S = semigroup_of(c);
  select_mode(*S);
  const auto z = zeta_series(S, lmax_of(c, *S));
  emit(c, render::zeta(*S, z, fmt));
  return z.stabilization_level ? 0 : 3;
}

int cmd_tree(const RunConfig& c) {
  const auto fmt = resolve_format(c);
  auto S = semigroup_of(c);
  const auto t = build_tree(S, lmax_of(c, *S));
  emit(c, render::tree(t, fmt));
  return 0;
}

int cmd_genzeta(const RunConfig& c) {
  const auto fmt = resolve_format(c);
  auto S = semigroup_of(c);
  if (!S->is_two_generator()) throw Error(ErrorKind::NotTwoGenerator, S->str() + " is not two-generated");
  const int lmax = lmax_of(c, *S);
  if (c.check) {
    for (int l = 1; l <= lmax; ++l)
      for (const auto& D : enumerate_level(S, l)) motivic_gen_classes_checked(D);
  }
  const auto g = motivic_gen_zeta(S, lmax, c.offset);
  std::optional<Laurent2> h;
  if (c.homfly) h = homfly_pq(S->generators()[0], S->generators()[1]);
  emit(c, render::genzeta(*S, g, h, fmt));
  return 0;
}

int cmd_verify(const RunConfig& c) {
  const auto fmt = resolve_format(c);
  auto S = semigroup_of(c);
  select_mode(*S);
  CountOptions opt;
  opt.node_budget = c.node_budget;
  const auto rep = verify_classes(S, lmax_of(c, *S), c.fields, opt);
  emit(c, render::report(rep, fmt));
  return rep.mismatches() == 0 ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semimodule trees and motivic Hilbert zeta functions of curve singularities"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--gens", cfg.generators, "semigroup generators, e.g. 3,4")->delimiter(',')->required();
    sub->add_option("--lmax", cfg.lmax, "largest colength (default 2*delta + max generator)")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "text|json|csv|dot|latex (default $HILBZETA_FORMAT or text)");
    sub->add_option("--output,-o", cfg.output, "write to a file instead of stdout");
  };

  auto* zeta = app.add_subcommand("zeta", "per-level classes and rational form of the motivic zeta function");
  add_common(zeta);
  auto* tree = app.add_subcommand("tree", "the semimodule tree");
  add_common(tree);
  auto* genzeta = app.add_subcommand("genzeta", "generator-refined zeta rows for <p,q>");
  add_common(genzeta);
  genzeta->add_flag("--homfly", cfg.homfly, "also print the torus-knot HOMFLY polynomial");
  genzeta->add_flag("--check", cfg.check, "cross-check every stratum by point-count interpolation");
  genzeta->add_option("--offset", cfg.offset, "exponent offset of (1-a^2)")->check(CLI::IsMember({0, 1}));
  auto* verify = app.add_subcommand("verify", "compare symbolic classes with finite-field point counts");
  add_common(verify);
  verify->add_option("--fields", cfg.fields, "primes, e.g. 2,3")->delimiter(',');
  verify->add_option("--node-budget", cfg.node_budget, "enumeration node cap per stratum and prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*zeta) return cmd_zeta(cfg);
    if (*tree) return cmd_tree(cfg);
    if (*genzeta) return cmd_genzeta(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const hz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 7;
  }
  return 2;
}

// cgl: class group L-values and the resonance method from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 capacity.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cgl/arith.hpp"
#include "cgl/checks.hpp"
#include "cgl/errors.hpp"
#include "cgl/family.hpp"
#include "cgl/reports.hpp"
#include "cgl/serialize.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct Common {
  std::string format = "text";
  std::string out;
  double t_cut = cgl::kDefaultTCut;
};

struct ResonateFlags {
  std::optional<double> log_m;
  std::optional<double> m;
  double gamma = 1.0 / 3.0;
  double a_param = 2.5;
  std::string k_blocks = "auto";
  std::size_t size_cap = 1'000'000;

  void add_to(CLI::App* app) {
    app->add_option("--log-m", log_m, "log M (M itself usually overflows)");
    app->add_option("--m", m, "M, when it fits in a double");
    app->add_option("--gamma", gamma, "block exponent gamma in (0, 1/2)")->capture_default_str();
    app->add_option("--a", a_param, "count parameter a in (2, 1/gamma)")->capture_default_str();
    app->add_option("--k-blocks", k_blocks, "number of blocks K, or auto")->capture_default_str();
    app->add_option("--size-cap", size_cap, "largest resonator set to enumerate")->capture_default_str();
  }

  bool given() const { return log_m || m; }

  cgl::ResonatorParams params() const {
    cgl::ResonatorParams p;
    if (log_m && m) throw CLI::ValidationError("--log-m and --m are mutually exclusive");
    if (log_m) p.log_m = *log_m;
    else if (m) p.log_m = std::log(*m);
    else throw CLI::ValidationError("one of --log-m or --m is required");
    p.gamma = gamma;
    p.a_param = a_param;
    if (k_blocks != "auto") {
      try {
        std::size_t used = 0;
        const int k = std::stoi(k_blocks, &used);
        if (used != k_blocks.size()) throw std::invalid_argument(k_blocks);
        p.k_blocks = k;
      } catch (const std::exception&) {
        throw CLI::ValidationError("--k-blocks must be a positive integer or auto");
      }
    }
    p.size_cap = size_cap;
    p.validate();
    return p;
  }
};

// Writes to --out when given, stdout otherwise.
void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw CLI::ValidationError("cannot write " + c.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

template <typename Report>
std::string render(const Common& c, const Report& rep) {
  if (c.format == "json") return cgl::json(rep).dump(2);
  if (c.format == "csv") return cgl::to_csv(rep);
  return cgl::to_text(rep);
}

std::string json_path_for(const std::string& csv_path) {
  const auto dot = csv_path.rfind('.');
  const auto slash = csv_path.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return csv_path.substr(0, dot) + ".json";
  }
  return csv_path + ".json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class group L-functions at the central point and the resonance method"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cgl 1.0");

  std::optional<std::uint64_t> sieve_cap;
  app.add_option("--sieve-capacity", sieve_cap, "largest prime sieve to build (overrides CGL_SIEVE_CAPACITY)");

  Common common;
  auto add_common = [&](CLI::App* sub, bool t_cut) {
    sub->add_option("--format", common.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", common.out, "output file (default stdout)");
    if (t_cut) {
      sub->add_option("--t-cut", common.t_cut, "AFE truncation parameter")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    }
  };

  std::int64_t disc = 0;

  auto* classgroup = app.add_subcommand("classgroup", "class number, structure and reduced forms");
  classgroup->add_option("--disc", disc, "D, with -D a fundamental discriminant")->required();
  add_common(classgroup, false);

  auto* lvalue = app.add_subcommand("lvalue", "central values L(1/2, chi)");
  std::vector<std::size_t> char_indices;
  bool all_chars = false;
  lvalue->add_option("--disc", disc, "D, with -D a fundamental discriminant")->required();
  auto* char_opt = lvalue->add_option("--char", char_indices, "character index (repeatable)");
  lvalue->add_flag("--all", all_chars, "every nontrivial character")->excludes(char_opt);
  add_common(lvalue, true);

  auto* resonate = app.add_subcommand("resonate", "build the resonator for one discriminant");
  ResonateFlags rflags;
  resonate->add_option("--disc", disc, "D, with -D a fundamental discriminant")->required();
  rflags.add_to(resonate);
  add_common(resonate, true);

  auto* family = app.add_subcommand("family", "geometric mean of M_D over X <= D <= 2X");
  ResonateFlags fflags;
  std::int64_t x = 0;
  double delta = 0.24;
  std::int64_t prime_max = 50;
  unsigned threads = 1;
  family->add_option("--x", x, "range parameter X")->required()->check(CLI::Range(std::int64_t{3}, std::int64_t{1} << 40));
  family->add_option("--delta", delta, "delta in the comparison bound exp(delta sqrt(log X log_3 X / log_2 X))")->capture_default_str();
  family->add_option("--prime-max", prime_max, "odd primes up to this go into the crivo table")->capture_default_str();
  family->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  family->add_option("--format", common.format, "csv (rows streamed) or json (full report)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_str("csv");
  family->add_option("--out", common.out, "CSV path; the JSON summary goes next to it");
  family->add_option("--t-cut", common.t_cut, "AFE truncation parameter")->check(CLI::PositiveNumber)->capture_default_str();
  fflags.add_to(family);

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite = "all";
  std::uint64_t seed = 20261016;
  verify->add_option("--suite", suite, "arith, special, classgroup, ideals, central, resonator, family or all")
      ->check(CLI::IsMember(cgl::checks::suite_names()))
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  verify->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--out", common.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (sieve_cap) cgl::set_sieve_capacity(*sieve_cap);

  try {
    if (*classgroup) {
      const auto g = cgl::class_group(cgl::Discriminant(disc));
      emit(common, render(common, cgl::make_classgroup_report(g)));
    } else if (*lvalue) {
      if (char_indices.empty() && !all_chars) throw CLI::ValidationError("give --char INDEX or --all");
      const auto g = cgl::class_group(cgl::Discriminant(disc));
      emit(common, render(common, cgl::make_lvalue_report(g, common.t_cut, all_chars ? std::vector<std::size_t>{} : char_indices)));
    } else if (*resonate) {
      const auto params = rflags.params();
      const auto g = cgl::class_group(cgl::Discriminant(disc));
      emit(common, render(common, cgl::make_resonate_report(g, params, common.t_cut)));
    } else if (*family) {
      cgl::FamilyOptions opts;
      opts.x = x;
      opts.delta = delta;
      opts.t_cut = common.t_cut;
      opts.threads = threads;
      opts.prime_max = prime_max;
      if (fflags.given()) opts.resonate = fflags.params();

      if (common.format == "json") {
        const auto rep = cgl::run_family(opts);
        emit(common, cgl::json(rep).dump(2));
        return 0;
      }
      std::ofstream file;
      std::ostream* rows = &std::cout;
      if (!common.out.empty()) {
        file.open(common.out, std::ios::binary);
        if (!file) throw CLI::ValidationError("cannot write " + common.out);
        rows = &file;
      }
      *rows << cgl::family_csv_header() << '\n' << std::flush;
      const auto rep = cgl::run_family(opts, [&](const cgl::FamilyRow& r) {
        *rows << cgl::family_csv_row(r) << '\n' << std::flush;
      });
      const std::string summary = cgl::family_summary(rep).dump(2);
      if (common.out.empty()) {
        std::cerr << summary << '\n';
      } else {
        std::ofstream js(json_path_for(common.out), std::ios::binary);
        js << summary << '\n';
      }
    } else if (*verify) {
      const auto rep = cgl::checks::run_suite(suite, seed);
      emit(common, common.format == "json" ? cgl::json(rep).dump(2) : cgl::to_text(rep));
      return rep.passed ? 0 : kExitVerify;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cgl::DiscriminantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cgl::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const cgl::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgpfd/graph.hpp"
#include "hgpfd/hyper_pfd.hpp"
#include "hgpfd/io.hpp"
#include "hgpfd/isomorphism.hpp"
#include "hgpfd/oracle.hpp"

namespace {

using namespace hgpfd;

constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

DirectedHypergraph load(const std::string& path) {
  if (path == "-") return read_hypergraph(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return read_hypergraph(in);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HGPFD_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::string axes_braces(const std::vector<int>& axes) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i > 0) os << ',';
    os << axes[i] + 1;
  }
  os << '}';
  return os.str();
}

std::string coordinate_table(const DirectedHypergraph& h, const Coordinatization& coords) {
  std::vector<VertexId> order(static_cast<std::size_t>(h.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return coords.coords_less(a, b); });
  std::ostringstream os;
  for (VertexId v : order) {
    os << "# coord " << h.name(v) << " = (";
    auto row = coords.coords_of(v);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ',';
      os << row[i] + 1;
    }
    os << ")\n";
  }
  return os.str();
}

struct FactorRun {
  Preprocessed pre;
  MergeGraph merges;
  Factorization fact;
};

FactorRun run_pipeline(const DirectedHypergraph& h) {
  FactorRun run;
  ensure_valid(h);
  if (!is_connected(h)) {
    throw std::invalid_argument("input hypergraph is disconnected; factorization needs connectivity");
  }
  if (h.vertex_count() == 1) {
    run.fact.coords = Coordinatization::trivial_k1();
    verify_factorization(h, run.fact);
    return run;
  }
  run.pre = preprocessing(h);
  run.merges = build_merge_graph(run.pre);
  run.fact = combine(h, run.pre, run.merges);
  verify_factorization(h, run.fact);
  return run;
}

std::string oracle_note(const DirectedHypergraph& h, const Factorization& fact) {
  if (h.vertex_count() > 8) return "skipped (n > 8)";
  auto expected = brute_force_pfd_hypergraph(h);
  if (!multisets_isomorphic(fact.factors, expected)) {
    throw InternalError("factorization disagrees with the exhaustive oracle");
  }
  return "match (" + std::to_string(expected.size()) + " prime factors)";
}

int cmd_factor(const std::string& file, bool as_json, bool verify) {
  DirectedHypergraph h = load(file);
  FactorRun run = run_pipeline(h);
  const auto& fact = run.fact;

  std::string oracle_line;
  if (verify) oracle_line = oracle_note(h, fact);

  if (as_json) {
    nlohmann::ordered_json j;
    j["vertex_count"] = h.vertex_count();
    j["arc_count"] = h.arc_count();
    j["rank"] = h.rank();
    j["section_factor_count"] = run.pre.axis_count;
    j["merge_edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : run.merges.edges) {
      j["merge_edges"].push_back({a + 1, b + 1});
    }
    j["partition"] = nlohmann::ordered_json::array();
    for (const auto& part : fact.partition) {
      nlohmann::ordered_json p = nlohmann::ordered_json::array();
      for (int axis : part) p.push_back(axis + 1);
      j["partition"].push_back(std::move(p));
    }
    j["factor_count"] = fact.factors.size();
    j["factors"] = nlohmann::ordered_json::array();
    for (const auto& factor : fact.factors) j["factors"].push_back(hypergraph_to_json(factor));
    j["coordinates"] = nlohmann::ordered_json::array();
    {
      std::vector<VertexId> order(static_cast<std::size_t>(h.vertex_count()));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](VertexId a, VertexId b) { return fact.coords.coords_less(a, b); });
      for (VertexId v : order) {
        nlohmann::ordered_json entry;
        entry["vertex"] = h.name(v);
        entry["coords"] = nlohmann::ordered_json::array();
        for (int value : fact.coords.coords_of(v)) entry["coords"].push_back(value + 1);
        j["coordinates"].push_back(std::move(entry));
      }
    }
    j["soundness"] = "ok";
    if (verify) j["oracle"] = oracle_line;
    std::cout << j.dump(2) << '\n';
    return 0;
  }

  std::cout << "# input: vertices=" << h.vertex_count() << " arcs=" << h.arc_count()
            << " rank=" << h.rank() << '\n';
  std::cout << "# prime factors: " << fact.factors.size() << '\n';
  if (!fact.partition.empty()) {
    std::cout << "# partition:";
    for (const auto& part : fact.partition) std::cout << ' ' << axes_braces(part);
    std::cout << '\n';
  }
  for (std::size_t s = 0; s < fact.factors.size(); ++s) {
    const auto& factor = fact.factors[s];
    std::cout << "# factor " << s + 1 << ": vertices=" << factor.vertex_count()
              << " arcs=" << factor.arc_count() << " axes=" << axes_braces(fact.partition[s])
              << '\n';
    std::cout << serialize(factor);
  }
  std::cout << "# coordinates\n" << coordinate_table(h, fact.coords);
  std::cout << "# soundness: ok\n";
  if (verify) std::cout << "# oracle: " << oracle_line << '\n';
  return 0;
}

int cmd_verify(const std::string& file) {
  DirectedHypergraph h = load(file);
  FactorRun run = run_pipeline(h);
  std::cout << "vertices=" << h.vertex_count() << " arcs=" << h.arc_count()
            << " rank=" << h.rank() << '\n';
  std::cout << "prime factors: " << run.fact.factors.size() << '\n';
  std::cout << "soundness: ok\n";
  std::cout << "oracle: " << oracle_note(h, run.fact) << '\n';
  return 0;
}

int cmd_product(const std::vector<std::string>& files) {
  DirectedHypergraph acc = load(files.front());
  ensure_valid(acc);
  for (std::size_t i = 1; i < files.size(); ++i) {
    DirectedHypergraph next = load(files[i]);
    ensure_valid(next);
    acc = cartesian_product(acc, next);
  }
  std::cout << serialize(acc);
  return 0;
}

int cmd_section(const std::string& file) {
  DirectedHypergraph h = load(file);
  ensure_valid(h);
  std::cout << section_lines(h);
  return 0;
}

int cmd_gen(std::uint64_t seed, int n, int r, int factors, double density, double directed) {
  GeneratorConfig cfg{seed, n, r, density, directed};
  auto is_prime = [](int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d) {
      if (x % d == 0) return false;
    }
    return true;
  };
  if (factors == 1) {
    DirectedHypergraph h;
    std::string note;
    if (n <= 8 || is_prime(n)) {
      h = random_prime_hypergraph(cfg);
      note = "certified prime";
    } else {
      h = random_connected_hypergraph(cfg);
      note = "connected; primality not certified (n > 8)";
    }
    std::cout << "# gen seed=" << seed << " n=" << n << " r=" << r << " factors=1"
              << " density=" << density << " directed=" << directed << '\n';
    std::cout << "# " << note << '\n';
    std::cout << serialize(h);
    return 0;
  }
  ProductSample sample = random_product(cfg, factors);
  std::cout << "# gen seed=" << seed << " n=" << n << " r=" << r << " factors=" << factors
            << " density=" << density << " directed=" << directed << '\n';
  std::cout << "# product of " << sample.factors.size() << " certified primes, vertex order shuffled\n";
  std::cout << serialize(sample.product);
  return 0;
}

int cmd_bench(std::uint64_t seed, int repeats, int min_n, int max_n, const std::string& series,
              bool assert_budget) {
  if (series != "r3") throw std::invalid_argument("unknown bench series: " + series);
  std::cout << "# bench series=" << series << " repeats=" << repeats << " seed=" << seed << '\n';
  std::cout << "# n m r time_ms time_ns/(m*log2n^2) time_ns/(m*n*r^2)\n";

  std::vector<double> log_m, log_t;
  double budget_row_ms = -1.0;
  for (int e = 1; (1 << e) <= max_n; ++e) {
    const int n = 1 << e;
    if (n < min_n) continue;
    ProductSample sample = random_bounded_rank_product(seed + static_cast<std::uint64_t>(e), e, 3);
    const auto& h = sample.product;
    double best_ms = 0.0;
    Factorization fact;
    for (int rep = 0; rep < repeats; ++rep) {
      auto start = std::chrono::steady_clock::now();
      fact = pfd_hypergraph(h);
      auto stop = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      if (rep == 0 || ms < best_ms) best_ms = ms;
    }
    const double m = h.arc_count();
    const double r = h.rank();
    const double log2n = std::log2(static_cast<double>(n));
    const double ns = best_ms * 1e6;
    std::cout << n << ' ' << h.arc_count() << ' ' << h.rank() << ' ' << best_ms << ' '
              << ns / (m * log2n * log2n) << ' ' << ns / (m * n * r * r) << '\n';
    log_m.push_back(std::log(m));
    log_t.push_back(std::log(std::max(best_ms, 1e-3)));
    if (n == 4096) budget_row_ms = best_ms;
  }

  if (log_m.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
      mx += log_m[i];
      my += log_t[i];
    }
    mx /= static_cast<double>(log_m.size());
    my /= static_cast<double>(log_m.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
      num += (log_m[i] - mx) * (log_t[i] - my);
      den += (log_m[i] - mx) * (log_m[i] - mx);
    }
    std::cout << "# fitted log-log slope (time vs m): " << (den > 0 ? num / den : 0.0) << '\n';
  }

  if (assert_budget) {
    constexpr double kCeilingMs = 10'000.0;
    if (budget_row_ms < 0) {
      throw InternalError("budget assertion requested but the n=4096 row did not run");
    }
    if (budget_row_ms > kCeilingMs) {
      throw InternalError("n=4096 row exceeded the wall-time ceiling: " +
                          std::to_string(budget_row_ms) + " ms");
    }
    std::cout << "# budget: n=4096 row " << budget_row_ms << " ms <= " << kCeilingMs << " ms\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime factor decomposition of connected directed hypergraphs "
               "under the Cartesian product"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false, verify_flag = false;
  auto* factor = app.add_subcommand("factor", "decompose a hypergraph into prime factors");
  factor->add_option("file", file, "input file, or - for stdin")->required();
  factor->add_flag("--json", as_json, "emit the result as JSON");
  factor->add_flag("--verify", verify_flag, "cross-check against the exhaustive oracle (n <= 8)");

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "factor and cross-check without printing factors");
  verify->add_option("file", verify_file, "input file, or - for stdin")->required();

  std::vector<std::string> product_files;
  auto* product = app.add_subcommand("product", "Cartesian product of two or more hypergraphs");
  product->add_option("files", product_files, "input files")->required()->expected(2, -1);

  std::string section_file;
  auto* section = app.add_subcommand("section", "print the 2-section edge list");
  section->add_option("file", section_file, "input file, or - for stdin")->required();

  std::uint64_t seed = default_seed();
  int gen_n = 6, gen_r = 3, gen_factors = 1;
  double gen_density = 1.5, gen_directed = 0.5;
  auto* gen = app.add_subcommand("gen", "emit a reproducible random instance");
  gen->add_option("--seed", seed, "RNG seed (HGPFD_SEED overrides the default)");
  gen->add_option("--n", gen_n, "vertex count (per factor when --factors > 1)");
  gen->add_option("--r", gen_r, "maximum rank");
  gen->add_option("--factors", gen_factors, "1 for a prime instance, 2 or 3 for a product");
  gen->add_option("--density", gen_density, "expected arcs per vertex");
  gen->add_option("--directed-fraction", gen_directed, "probability an arc is directed");

  std::uint64_t bench_seed = default_seed() + 42;
  int repeats = 3, min_n = 256, max_n = 8192;
  std::string series = "r3";
  bool assert_budget = false;
  auto* bench = app.add_subcommand("bench", "scaling report over a doubling series");
  bench->add_option("--seed", bench_seed, "RNG seed");
  bench->add_option("--series", series, "instance series (r3: rank-bounded products)");
  bench->add_option("--repeats", repeats, "timing repeats per row (minimum is reported)");
  bench->add_option("--min-n", min_n, "smallest vertex count");
  bench->add_option("--max-n", max_n, "largest vertex count");
  bench->add_flag("--assert-budget", assert_budget,
                  "fail (exit 3) if the n=4096 row exceeds 10 s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*factor) return cmd_factor(file, as_json, verify_flag);
    if (*verify) return cmd_verify(verify_file);
    if (*product) return cmd_product(product_files);
    if (*section) return cmd_section(section_file);
    if (*gen) return cmd_gen(seed, gen_n, gen_r, gen_factors, gen_density, gen_directed);
    if (*bench) return cmd_bench(bench_seed, repeats, min_n, max_n, series, assert_budget);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InternalError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}

// Command-line front end: exact anticommutation counting, pairwise-commutation
// certification, agreement checks against the quadratic baseline, and a
// benchmark sweep with exact operation counters.
//
// Exit codes: 0 success / all-commute, 1 witness found or algorithm mismatch,
// 2 parse or input error, 3 weight-cap violation. Flag-usage errors follow
// CLI11's own codes.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locz/baseline.hpp"
#include "locz/batch.hpp"
#include "locz/corpus.hpp"
#include "locz/errors.hpp"
#include "locz/pattern_table.hpp"

namespace {

double seconds(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double>(ns).count();
}

const std::map<std::string, locz::CorpusFormat> kFormatNames = {
    {"auto", locz::CorpusFormat::Auto},
    {"dense", locz::CorpusFormat::Dense},
    {"sparse", locz::CorpusFormat::Sparse},
};

const std::map<std::string, locz::WeightDist> kDistNames = {
    {"fixed", locz::WeightDist::FixedK},
    {"uniform", locz::WeightDist::UniformOneToK},
};

const char* dist_name(locz::WeightDist d) {
  return d == locz::WeightDist::FixedK ? "fixed" : "uniform";
}

locz::Corpus load_corpus(const std::string& path, locz::CorpusFormat format) {
  if (path == "-") {
    return locz::read_corpus(std::cin, format);
  }
  return locz::read_corpus_file(path, format);
}

void check_weight_cap(const locz::Corpus& corpus, std::size_t cap) {
  for (std::size_t i = 0; i < corpus.strings.size(); ++i) {
    const std::size_t w = corpus.strings[i].weight();
    if (w > cap) {
      throw locz::WeightCapExceededError(
          "line " + std::to_string(corpus.lines[i]) + ": weight " +
          std::to_string(w) + " exceeds weight cap " + std::to_string(cap));
    }
  }
}

int run_count(const std::string& path, locz::CorpusFormat format,
              std::size_t cap) {
  const auto corpus = load_corpus(path, format);
  check_weight_cap(corpus, cap);
  const auto report = locz::count_all_anticommuting_pairs(corpus.strings, cap);
  std::cout << "m=" << report.m << " T=" << report.total_anti_pairs
            << " dict_updates=" << report.counters.dict_updates
            << " dict_lookups=" << report.counters.dict_lookups
            << " elapsed_s=" << seconds(report.elapsed) << "\n";
  std::cerr << report.total_anti_pairs << " anticommuting pair(s) among "
            << report.m << " string(s)\n";
  return 0;
}

int run_certify(const std::string& path, locz::CorpusFormat format,
                std::size_t cap) {
  const auto corpus = load_corpus(path, format);
  check_weight_cap(corpus, cap);
  const auto report = locz::certify(corpus.strings, cap);
  std::cerr << "m=" << report.m
            << " dict_updates=" << report.counters.dict_updates
            << " dict_lookups=" << report.counters.dict_lookups
            << " elapsed_s=" << seconds(report.elapsed) << "\n";
  if (report.witness) {
    std::cout << "WITNESS " << report.witness->first << " "
              << report.witness->second << "\n";
    return 1;
  }
  std::cout << "ALL-COMMUTE\n";
  return 0;
}

// Smallest prefix length on which the two algorithms already disagree.
std::size_t minimal_failing_prefix(
    const std::vector<locz::SparsePauliString>& strings, std::size_t cap) {
  const auto profile = locz::anti_degree_profile(strings, cap);
  std::vector<locz::SymplecticPair> encoded;
  encoded.reserve(strings.size());
  for (const auto& s : strings) {
    encoded.push_back(locz::to_symplectic(s));
  }
  for (std::size_t i = 0; i < strings.size(); ++i) {
    std::uint64_t against_prefix = 0;
    for (std::size_t j = 0; j < i; ++j) {
      against_prefix += locz::symplectic_anticommutes(encoded[j], encoded[i]);
    }
    if (against_prefix != profile[i]) {
      return i + 1;
    }
  }
  return strings.size();
}

int run_compare(std::size_t m, std::uint32_t n, std::uint32_t k,
                std::uint64_t seed, std::size_t trials, locz::WeightDist dist,
                std::size_t cap) {
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = seed + trial;
    const locz::InstanceSpec spec{m, n, k, dist, trial_seed};
    const auto strings = locz::generate(spec);
    const auto zeta = locz::count_all_anticommuting_pairs(strings, cap);
    const auto base = locz::pairwise_count_report(strings);
    const bool agree = zeta.total_anti_pairs == base.anti_pairs;
    std::cout << "trial=" << trial << " seed=" << trial_seed << " m=" << m
              << " n=" << n << " k=" << k << " weight_dist=" << dist_name(dist)
              << " T_zeta=" << zeta.total_anti_pairs
              << " T_baseline=" << base.anti_pairs
              << " agree=" << (agree ? 1 : 0)
              << " zeta_s=" << seconds(zeta.elapsed)
              << " baseline_s=" << seconds(base.elapsed)
              << " dict_updates=" << zeta.counters.dict_updates
              << " dict_lookups=" << zeta.counters.dict_lookups
              << " pair_tests=" << base.pair_tests << "\n";
    if (!agree) {
      const std::size_t prefix = minimal_failing_prefix(strings, cap);
      std::cout << "reproduce: seed=" << trial_seed << " n=" << n << " k=" << k
                << " weight_dist=" << dist_name(dist) << " m=" << prefix
                << "\n";
      std::cerr << "MISMATCH at trial " << trial << ": T_zeta="
                << zeta.total_anti_pairs << " T_baseline=" << base.anti_pairs
                << "; smallest failing prefix has " << prefix << " string(s)\n";
      return 1;
    }
  }
  std::cerr << trials << " trial(s), all agree\n";
  return 0;
}

int run_bench(const std::vector<std::size_t>& m_list,
              const std::vector<std::uint32_t>& k_list, std::uint32_t n,
              std::uint64_t seed, locz::WeightDist dist, std::size_t cap,
              std::size_t baseline_max_m) {
  for (const auto k : k_list) {
    for (const auto m : m_list) {
      const locz::InstanceSpec spec{m, n, k, dist, seed};
      const auto strings = locz::generate(spec);
      const auto zeta = locz::count_all_anticommuting_pairs(strings, cap);
      std::cout << "algo=zeta m=" << m << " k=" << k << " n=" << n
                << " weight_dist=" << dist_name(dist) << " seed=" << seed
                << " T=" << zeta.total_anti_pairs
                << " elapsed_s=" << seconds(zeta.elapsed)
                << " dict_updates=" << zeta.counters.dict_updates
                << " dict_lookups=" << zeta.counters.dict_lookups
                << " pair_tests=0\n";
      if (baseline_max_m != 0 && m > baseline_max_m) {
        std::cerr << "skipping baseline at m=" << m << " (above --baseline-max-m "
                  << baseline_max_m << ")\n";
        continue;
      }
      const auto base = locz::pairwise_count_report(strings);
      std::cout << "algo=baseline m=" << m << " k=" << k << " n=" << n
                << " weight_dist=" << dist_name(dist) << " seed=" << seed
                << " T=" << base.anti_pairs
                << " elapsed_s=" << seconds(base.elapsed)
                << " dict_updates=0 dict_lookups=0 pair_tests="
                << base.pair_tests << "\n";
      if (base.anti_pairs != zeta.total_anti_pairs) {
        std::cerr << "MISMATCH at m=" << m << " k=" << k << ": T_zeta="
                  << zeta.total_anti_pairs << " T_baseline=" << base.anti_pairs
                  << "\n";
        return 1;
      }
    }
  }
  return 0;
}

int run_gen(std::size_t m, std::uint32_t n, std::uint32_t k, std::uint64_t seed,
            locz::WeightDist dist, locz::CorpusFormat format,
            const std::string& out_path) {
  if (format == locz::CorpusFormat::Auto) {
    format = locz::CorpusFormat::Sparse;
  }
  const locz::InstanceSpec spec{m, n, k, dist, seed};
  const auto strings = locz::generate(spec);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) {
      throw locz::Error("cannot open output file: " + out_path);
    }
    out = &file;
  }
  *out << "# m=" << m << " n=" << n << " k=" << k
       << " weight_dist=" << dist_name(dist) << " seed=" << seed << " format="
       << (format == locz::CorpusFormat::Dense ? "dense" : "sparse") << "\n";
  locz::write_corpus(*out, strings, format, n);
  return 0;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const locz::WeightCapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const locz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact anticommutation counting, certification, and witness finding "
      "for collections of sparse Pauli strings (all qubit indices 0-based)"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  auto format = locz::CorpusFormat::Auto;
  auto dist = locz::WeightDist::FixedK;
  std::size_t cap = locz::PatternCountTable::kDefaultWeightCap;
  std::size_t m = 1000;
  std::uint32_t n = 128;
  std::uint32_t k = 4;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  std::vector<std::size_t> m_list{1000, 10000};
  std::vector<std::uint32_t> k_list{4};
  std::size_t baseline_max_m = 0;

  const auto format_option = [&](CLI::App* sub) {
    sub->add_option("--format", format, "corpus format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->default_str("auto");
  };
  const auto cap_option = [&](CLI::App* sub) {
    sub->add_option("--weight-cap", cap, "largest accepted string weight")
        ->capture_default_str();
  };
  const auto instance_options = [&](CLI::App* sub) {
    sub->add_option("--n", n, "qubit-index range (indices 0..n-1)")
        ->capture_default_str();
    sub->add_option("--seed", seed, "instance seed")->capture_default_str();
    sub->add_option("--weight-dist", dist,
                    "string weights: fixed k, or uniform over 1..k")
        ->transform(CLI::CheckedTransformer(kDistNames, CLI::ignore_case))
        ->default_str("fixed");
  };

  auto* count = app.add_subcommand(
      "count", "count anticommuting pairs in a corpus file ('-' for stdin)");
  count->add_option("input", path, "corpus file")->required();
  format_option(count);
  cap_option(count);

  auto* certify = app.add_subcommand(
      "certify",
      "certify pairwise commutation; prints ALL-COMMUTE or WITNESS i j");
  certify->add_option("input", path, "corpus file")->required();
  format_option(certify);
  cap_option(certify);

  auto* compare = app.add_subcommand(
      "compare",
      "run both algorithms on generated instances and assert equal counts; "
      "trial t uses seed+t");
  compare->add_option("--m", m, "strings per instance")->capture_default_str();
  compare->add_option("--k", k, "maximum weight")->capture_default_str();
  compare->add_option("--trials", trials, "number of instances")
      ->capture_default_str();
  instance_options(compare);
  cap_option(compare);

  auto* bench = app.add_subcommand(
      "bench", "sweep an m x k grid, reporting timings and exact counters");
  bench->add_option("--m", m_list, "comma-separated list of m values")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--k", k_list, "comma-separated list of k values")
      ->delimiter(',')
      ->capture_default_str();
  bench
      ->add_option("--baseline-max-m", baseline_max_m,
                   "skip the baseline above this m (0 = never skip)")
      ->capture_default_str();
  instance_options(bench);
  cap_option(bench);

  auto* gen = app.add_subcommand("gen", "generate a reproducible corpus");
  gen->add_option("--m", m, "number of strings")->capture_default_str();
  gen->add_option("--k", k, "maximum weight")->capture_default_str();
  gen->add_option("-o,--output", out_path, "output file (default stdout)");
  gen->add_option("--format", format, "output format (sparse or dense)")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
      ->default_str("sparse");
  instance_options(gen);

  CLI11_PARSE(app, argc, argv);

  if (count->parsed()) {
    return guarded([&] { return run_count(path, format, cap); });
  }
  if (certify->parsed()) {
    return guarded([&] { return run_certify(path, format, cap); });
  }
  if (compare->parsed()) {
    return guarded(
        [&] { return run_compare(m, n, k, seed, trials, dist, cap); });
  }
  if (bench->parsed()) {
    return guarded([&] {
      return run_bench(m_list, k_list, n, seed, dist, cap, baseline_max_m);
    });
  }
  if (gen->parsed()) {
    return guarded(
        [&] { return run_gen(m, n, k, seed, dist, format, out_path); });
  }
  return 0;
}

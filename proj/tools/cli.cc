// Copyright 2026 The lambdagen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lambdagen/analytic.h"
#include "lambdagen/boltzmann.h"
#include "lambdagen/counting.h"
#include "lambdagen/errors.h"
#include "lambdagen/random.h"
#include "lambdagen/terms.h"
#include "lambdagen/trees.h"
#include "lambdagen/typing.h"
#include "lambdagen/unrank.h"

namespace lambdagen::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FamilyKind { kLambda, kBounded, kMotzkin, kBinary };

enum class OutputFormat { kText, kTromp };

std::string FormatTerm(TermView t, OutputFormat format) {
  return format == OutputFormat::kTromp ? EncodeTromp(t).ToText()
                                        : PrintTerm(t);
}

struct FamilyArg {
  FamilyKind kind = FamilyKind::kLambda;
  std::size_t bound = 0;  // kBounded only; "closed" is bound 0

  bool is_lambda_family() const {
    return kind == FamilyKind::kLambda || kind == FamilyKind::kBounded;
  }
};

FamilyArg ParseFamily(const std::string& text) {
  if (text == "lambda") return {FamilyKind::kLambda};
  if (text == "closed") return {FamilyKind::kBounded, 0};
  if (text == "motzkin") return {FamilyKind::kMotzkin};
  if (text == "binary") return {FamilyKind::kBinary};
  constexpr std::string_view kPrefix = "bounded:";
  if (text.starts_with(kPrefix)) {
    const std::string digits = text.substr(kPrefix.size());
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char c) { return c >= '0' && c <= '9'; })) {
      try {
        return {FamilyKind::kBounded, std::stoull(digits)};
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw UsageError("unknown family '" + text +
                   "' (expected lambda, closed, bounded:<m>, motzkin, binary)");
}

GFSpec SpecFor(const FamilyArg& family, const std::string& command) {
  switch (family.kind) {
    case FamilyKind::kLambda:
      return GFSpec::Lambda();
    case FamilyKind::kMotzkin:
      return GFSpec::Motzkin();
    case FamilyKind::kBinary:
      return GFSpec::Binary();
    case FamilyKind::kBounded:
      break;
  }
  throw UsageError(command + " needs a family with a generating function " +
                   "(lambda, motzkin, binary)");
}

BigNat ParseBigNat(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw UsageError("expected a decimal natural number, got '" + text + "'");
  }
  return BigNat(text);
}

std::string FormatReal(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", x);
  return buffer;
}

std::vector<std::string> ReadLines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

BigNat Count(const FamilyArg& family, std::size_t n) {
  switch (family.kind) {
    case FamilyKind::kLambda:
      return CountPlain(n);
    case FamilyKind::kBounded:
      return CountBounded(family.bound, n);
    case FamilyKind::kMotzkin:
      return CountMotzkin(n);
    case FamilyKind::kBinary:
      return CountBinary(n);
  }
  return 0;
}

struct GenOptions {
  FamilyArg family;
  std::uint64_t min_size = 0;
  std::uint64_t max_size = 0;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  bool typable = false;
  bool close = false;
  std::uint64_t max_attempts = 1'000'000;
  OutputFormat format = OutputFormat::kText;
};

// Uniform over all terms of a bounded family with size in the window.
Term DrawBoundedInWindow(const GenOptions& options, RandomState& rng) {
  CountTable& counts = CountTable::Shared();
  const std::size_t m = options.family.bound;
  BigNat total = 0;
  for (std::uint64_t n = options.min_size; n <= options.max_size; ++n) {
    total += counts.Bounded(m, n);
  }
  if (total == 0) throw DomainError("no term of the family in the window");
  BigNat k = rng.UniformBelow(total) + 1;
  for (std::uint64_t n = options.min_size;; ++n) {
    const BigNat here = counts.Bounded(m, n);
    if (k <= here) return UnrankBounded(m, n, k, counts);
    k -= here;
  }
}

std::string GenerateOne(const GenOptions& options, std::uint64_t seed) {
  RandomState rng(seed);
  const WindowSpec window{options.min_size, options.max_size,
                          options.max_attempts};
  switch (options.family.kind) {
    case FamilyKind::kMotzkin:
      return PrintMTree(SampleInWindow(MotzkinSampler(), window, rng));
    case FamilyKind::kBinary:
      return PrintBTree(SampleInWindow(BinarySampler(), window, rng));
    case FamilyKind::kLambda:
    case FamilyKind::kBounded:
      break;
  }
  const LambdaSampler sampler;
  TypeInferencer inferencer;
  for (std::uint64_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    Term t = options.family.kind == FamilyKind::kLambda
                 ? SampleInWindow(sampler, window, rng)
                 : DrawBoundedInWindow(options, rng);
    if (options.typable && !inferencer.IsTypable(t)) continue;
    if (options.close) {
      t = CloseTerm(t);
      if (TermSize(t) > options.max_size) continue;
    }
    return FormatTerm(t, options.format);
  }
  throw AttemptsExhaustedError(options.max_attempts);
}

void RunGen(const GenOptions& options, std::ostream& out) {
  if (options.min_size < 1 || options.min_size > options.max_size) {
    throw UsageError("gen needs 1 <= --min <= --max");
  }
  if (options.max_attempts < 1) throw UsageError("--max-attempts must be >= 1");
  if (!options.family.is_lambda_family() &&
      (options.typable || options.close ||
       options.format != OutputFormat::kText)) {
    throw UsageError(
        "--typable, --close and --format apply to lambda families only");
  }

  std::vector<std::string> lines(options.count);
  std::vector<std::exception_ptr> errors(options.count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < options.count; i = next++) {
      try {
        lines[i] = GenerateOne(options, options.seed + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::uint64_t threads = std::clamp<std::uint64_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(
                                                  options.count, 1));
  std::vector<std::thread> pool;
  for (std::uint64_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (std::uint64_t i = 0; i < options.count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out << lines[i] << '\n';
  }
}

struct StatsOptions {
  FamilyArg family;
  double x = 0;
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  std::uint64_t ceiling = 1'000'000;
};

template <class Sampler, class KindsOf>
void CollectStats(const Sampler& sampler, const StatsOptions& options,
                  std::size_t kind_count, KindsOf kinds_of,
                  std::vector<std::uint64_t>& kind_totals,
                  std::vector<std::uint64_t>& sizes) {
  RandomState rng(options.seed);
  kind_totals.assign(kind_count, 0);
  for (std::uint64_t d = 0; d < options.draws; ++d) {
    auto outcome = sampler(options.ceiling, rng);
    if (!outcome.ok()) continue;
    kinds_of(outcome.value(), kind_totals);
    sizes.push_back(outcome.size());
  }
}

void RunStats(const StatsOptions& options, std::ostream& out) {
  const GFSpec spec = SpecFor(options.family, "stats");
  if (!(options.x > 0.0) || options.x > spec.critical() + 1e-12) {
    throw DomainError("--x must lie in (0, " + FormatReal(spec.critical()) +
                      "]");
  }
  if (options.draws < 1) throw UsageError("--draws must be >= 1");
  const double x = std::min(options.x, spec.critical());

  std::vector<std::string> names;
  std::vector<std::uint64_t> totals;
  std::vector<std::uint64_t> sizes;
  switch (options.family.kind) {
    case FamilyKind::kLambda:
      names = {"variable", "abstraction", "application"};
      CollectStats(LambdaSampler(x), options, 3,
                   [](const Term& t, std::vector<std::uint64_t>& acc) {
                     for (const TermNode& node : t.nodes()) {
                       ++acc[static_cast<std::size_t>(node.kind)];
                     }
                   },
                   totals, sizes);
      break;
    case FamilyKind::kMotzkin:
      names = {"leaf", "unary", "binary"};
      CollectStats(MotzkinSampler(x), options, 3,
                   [](const MTree& t, std::vector<std::uint64_t>& acc) {
                     for (MTreeKind k : t.kinds()) {
                       ++acc[static_cast<std::size_t>(k)];
                     }
                   },
                   totals, sizes);
      break;
    case FamilyKind::kBinary:
      names = {"leaf", "node"};
      CollectStats(BinarySampler(x), options, 2,
                   [](const BTree& t, std::vector<std::uint64_t>& acc) {
                     for (BTreeKind k : t.kinds()) {
                       ++acc[static_cast<std::size_t>(k)];
                     }
                   },
                   totals, sizes);
      break;
    case FamilyKind::kBounded:
      break;
  }

  const BranchProbs expected = ComputeBranchProbs(spec, x);
  std::uint64_t nodes = 0;
  for (std::uint64_t t : totals) nodes += t;
  out << "family " << FamilyName(spec.family()) << '\n';
  out << "x " << FormatReal(x) << '\n';
  out << "draws " << options.draws << '\n';
  out << "ok " << sizes.size() << '\n';
  out << "exceeded " << options.draws - sizes.size() << '\n';
  for (std::size_t i = 0; i < names.size(); ++i) {
    const double empirical =
        nodes == 0 ? 0.0 : static_cast<double>(totals[i]) / nodes;
    out << "kind " << names[i] << ' ' << FormatReal(empirical) << " expected "
        << FormatReal(expected[i]) << '\n';
  }
  if (sizes.empty()) {
    out << "size none\n";
    return;
  }
  std::sort(sizes.begin(), sizes.end());
  double sum = 0;
  for (std::uint64_t s : sizes) sum += static_cast<double>(s);
  out << "size min " << sizes.front() << " median " << sizes[sizes.size() / 2]
      << " mean " << FormatReal(sum / sizes.size()) << " max " << sizes.back()
      << '\n';
  // Power-of-two buckets [2^b, 2^(b+1)).
  std::map<std::uint64_t, std::uint64_t> buckets;
  for (std::uint64_t s : sizes) {
    std::uint64_t lo = 1;
    while (lo * 2 <= s) lo *= 2;
    ++buckets[lo];
  }
  for (const auto& [lo, count] : buckets) {
    out << "histogram [" << lo << ',' << lo * 2 << ") " << count << '\n';
  }
}

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& seed,
                          std::ostream& err) {
  if (seed) return *seed;
  const std::uint64_t drawn = RandomState::EntropySeed();
  err << "seed: " << drawn << '\n';
  return drawn;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Count, rank, unrank and randomly generate lambda terms and "
               "trees",
               "lambdagen"};
  app.require_subcommand(1);

  std::string family_text;
  std::size_t size = 0;
  std::string rank_text;
  std::optional<std::uint64_t> seed;
  GenOptions gen;
  StatsOptions stats;
  double mean = 0;
  OutputFormat format = OutputFormat::kText;
  const std::map<std::string, OutputFormat> formats = {
      {"text", OutputFormat::kText}, {"tromp", OutputFormat::kTromp}};

  auto* count_cmd = app.add_subcommand("count", "Number of objects of size n");
  count_cmd->add_option("family", family_text)->required();
  count_cmd->add_option("n", size)->required();

  auto* unrank_cmd = app.add_subcommand("unrank", "The k-th term of size n");
  unrank_cmd->add_option("family", family_text)->required();
  unrank_cmd->add_option("n", size)->required();
  unrank_cmd->add_option("k", rank_text)->required();
  unrank_cmd->add_option("--format", format, "Output as text or tromp bits")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* rank_cmd =
      app.add_subcommand("rank", "Rank of the size-n term read from stdin");
  rank_cmd->add_option("n", size)->required();

  auto* gen_cmd = app.add_subcommand("gen", "Random objects with size in a window");
  gen_cmd->add_option("family", family_text)->required();
  gen_cmd->add_option("--min", gen.min_size, "Smallest accepted size")
      ->required();
  gen_cmd->add_option("--max", gen.max_size, "Largest accepted size")
      ->required();
  gen_cmd->add_option("--count", gen.count, "Number of objects");
  gen_cmd->add_option("--seed", seed, "64-bit seed; object i uses seed+i");
  gen_cmd->add_flag("--typable", gen.typable, "Keep simply typable terms only");
  gen_cmd->add_flag("--close", gen.close, "Close terms with abstractions");
  gen_cmd->add_option("--max-attempts", gen.max_attempts,
                      "Rejections allowed before giving up");
  gen_cmd->add_option("--format", gen.format, "Output as text or tromp bits")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* tune_cmd = app.add_subcommand("tune", "Boltzmann parameter for a mean size");
  tune_cmd->add_option("family", family_text)->required();
  tune_cmd->add_option("--mean", mean)->required();

  auto* critical_cmd = app.add_subcommand("critical", "Singularity of the family");
  critical_cmd->add_option("family", family_text)->required();

  auto* typecheck_cmd =
      app.add_subcommand("typecheck", "Principal type of each term on stdin");
  auto* encode_cmd = app.add_subcommand("encode", "Terms on stdin to Tromp bits");
  auto* decode_cmd = app.add_subcommand("decode", "Tromp bits on stdin to terms");

  auto* stats_cmd =
      app.add_subcommand("stats", "Empirical sampler statistics at parameter x");
  stats_cmd->add_option("family", family_text)->required();
  stats_cmd->add_option("--x", stats.x)->required();
  stats_cmd->add_option("--draws", stats.draws)->required();
  stats_cmd->add_option("--seed", seed);
  stats_cmd->add_option("--ceiling", stats.ceiling, "Size ceiling per draw");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lambdagen: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) {
      out << Count(ParseFamily(family_text), size) << '\n';
    } else if (unrank_cmd->parsed()) {
      const FamilyArg family = ParseFamily(family_text);
      if (!family.is_lambda_family()) {
        throw UsageError("unrank applies to lambda families only");
      }
      const BigNat k = ParseBigNat(rank_text);
      const Term t = family.kind == FamilyKind::kLambda
                         ? UnrankPlain(size, k)
                         : UnrankBounded(family.bound, size, k);
      out << FormatTerm(t, format) << '\n';
    } else if (rank_cmd->parsed()) {
      const std::vector<std::string> lines = ReadLines(in);
      if (lines.size() != 1) throw UsageError("rank reads exactly one term");
      const Term t = ParseTerm(lines.front());
      if (TermSize(t) != size) {
        throw DomainError("term has size " + std::to_string(TermSize(t)) +
                          ", not " + std::to_string(size));
      }
      out << RankPlain(t) << '\n';
    } else if (gen_cmd->parsed()) {
      gen.family = ParseFamily(family_text);
      gen.seed = ResolveSeed(seed, err);
      RunGen(gen, out);
    } else if (tune_cmd->parsed()) {
      const GFSpec spec = SpecFor(ParseFamily(family_text), "tune");
      out << FormatReal(TuneForMean(spec, mean)) << '\n';
    } else if (critical_cmd->parsed()) {
      const GFSpec spec = SpecFor(ParseFamily(family_text), "critical");
      out << FormatReal(CriticalValue(spec)) << '\n';
    } else if (typecheck_cmd->parsed()) {
      TypeInferencer inferencer;
      for (const std::string& line : ReadLines(in)) {
        const auto type = inferencer.Infer(ParseTerm(line));
        out << (type ? PrintType(*type) : "untypable") << '\n';
      }
    } else if (encode_cmd->parsed()) {
      for (const std::string& line : ReadLines(in)) {
        out << EncodeTromp(ParseTerm(line)).ToText() << '\n';
      }
    } else if (decode_cmd->parsed()) {
      for (const std::string& line : ReadLines(in)) {
        const auto first = line.find_first_not_of(" \t");
        const auto last = line.find_last_not_of(" \t");
        const BitString bits =
            BitString::FromText(line.substr(first, last - first + 1));
        out << PrintTerm(DecodeTromp(bits)) << '\n';
      }
    } else if (stats_cmd->parsed()) {
      stats.family = ParseFamily(family_text);
      SpecFor(stats.family, "stats");
      stats.seed = ResolveSeed(seed, err);
      RunStats(stats, out);
    }
  } catch (const UsageError& e) {
    err << "lambdagen: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AttemptsExhaustedError& e) {
    err << "lambdagen: " << e.what() << '\n';
    return kExitAttempts;
  } catch (const Error& e) {
    err << "lambdagen: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace lambdagen::cli

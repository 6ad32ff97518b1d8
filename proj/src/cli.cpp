// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "gpkc/census.hpp"
#include "gpkc/covers.hpp"
#include "gpkc/dot.hpp"
#include "gpkc/graph6.hpp"

namespace gpkc {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(std::string_view text, const std::string &what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) throw UsageError(what + ": expected an integer, got '" + std::string(text) + "'");
  return value;
}

SearchOptions search_options_from_env() {
  SearchOptions options;
  if (const char *bound = std::getenv("GPKC_MAX_VERTICES"); bound != nullptr && *bound != '\0') {
    options.max_vertices = parse_int(bound, "GPKC_MAX_VERTICES");
    if (options.max_vertices < 1) throw UsageError("GPKC_MAX_VERTICES must be positive");
  }
  return options;
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw DomainError("failed writing " + path);
}

bool ends_with(const std::string &s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct ClassifyArgs {
  int n = 0, k = 0;
  bool json = false, ascii = false;
};

int do_classify(const ClassifyArgs &a, const SearchOptions &search, std::ostream &out) {
  const GpParams p(a.n, a.k);
  const Classification c = classify(p);
  std::string line = summary(c, a.ascii);
  std::optional<bool> cover;
  std::vector<std::string> quotients, involutions;
  if (c.cover == CoverClaim::kDeferred) {
    CensusOptions options;
    options.with_oracle = true;
    options.ascii = a.ascii;
    options.search = search;
    const CensusRow row = census_row(p, options);
    cover = row.oracle_cover;
    if (*cover) {
      line = std::string(tag_name(c.tag)) + ": quotient " + row.quotient + ", involution " + row.involution +
             " (decided by search)";
      quotients = {row.quotient};
      involutions = {row.involution};
    } else {
      line = std::string(tag_name(c.tag)) + ": not a Kronecker cover (decided by search; " + row.notes + ")";
    }
  } else {
    cover = c.cover == CoverClaim::kYes;
    for (const auto &q : c.quotients) quotients.push_back(describe(q));
    for (const auto &w : c.involutions) involutions.push_back(render(w, a.ascii));
  }
  if (!a.json) {
    out << line << "\n";
    return kExitOk;
  }
  nlohmann::ordered_json doc;
  doc["n"] = a.n;
  doc["k"] = a.k;
  doc["case"] = tag_name(c.tag);
  doc["cover"] = *cover;
  doc["quotients"] = quotients;
  doc["involutions"] = involutions;
  doc["summary"] = line;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

struct QuotientArgs {
  int n = 0, k = 0;
  std::optional<int> a;
  std::string dot;
};

int do_quotient(const QuotientArgs &args, std::ostream &out) {
  const GpParams p(args.n, args.k);
  const Classification c = classify(p);
  if (c.cover != CoverClaim::kYes) {
    throw DomainError("GP(" + std::to_string(args.n) + "," + std::to_string(args.k) + ") has no closed-form quotient (" +
                      std::string(tag_name(c.tag)) + ")");
  }
  Permutation w;
  if (!args.a) {
    w = materialize(p, c.involutions.front());
  } else {
    // Shift a of the rim-switching family of this case.
    CanonicalTriple t{((*args.a % args.n) + args.n) % args.n, 0, 0};
    if (c.tag == CaseTag::kB1) t.c = 1;
    if (c.tag == CaseTag::kB2) t.b = t.c = 1;
    w = from_triple(args.n, args.k, t);
  }
  const Graph q = quotient(gp(p), w);
  out << encode_graph6(q) << "\n";
  if (!args.dot.empty()) write_file(args.dot, to_dot(q, std::nullopt, "quotient"));
  return kExitOk;
}

struct KcArgs {
  std::string gp_pair;
  std::string g6;
};

int do_kc(const KcArgs &args, std::ostream &out) {
  Graph g;
  if (!args.gp_pair.empty()) {
    const auto comma = args.gp_pair.find(',');
    if (comma == std::string::npos) throw UsageError("--gp expects N,K");
    const int n = parse_int(std::string_view(args.gp_pair).substr(0, comma), "--gp");
    const int k = parse_int(std::string_view(args.gp_pair).substr(comma + 1), "--gp");
    g = gp(GpParams(n, k));
  } else {
    g = decode_graph6(args.g6);
  }
  out << encode_graph6(kronecker_cover(g)) << "\n";
  return kExitOk;
}

struct CensusArgs {
  int min_n = 3, max_n = 0;
  bool oracle = false, verbose = false, ascii = false;
  unsigned threads = 0;
  std::string out_path;
};

int do_census(const CensusArgs &args, const SearchOptions &search, std::ostream &out) {
  CensusOptions options;
  options.with_oracle = args.oracle;
  options.verbose = args.verbose;
  options.ascii = args.ascii;
  options.threads = args.threads;
  options.search = search;
  if (args.oracle && 2 * args.max_n > search.max_vertices) {
    throw DomainError("census --oracle requires 2*max-n <= " + std::to_string(search.max_vertices));
  }
  const auto rows = census(args.min_n, args.max_n, options);
  const bool json = ends_with(args.out_path, ".json");
  const std::string text = json ? to_json(rows) : to_csv(rows);
  if (args.out_path.empty()) {
    out << text;
  } else {
    write_file(args.out_path, text);
  }
  return kExitOk;
}

struct VerifyArgs {
  int max_n = 0;
  unsigned threads = 0;
};

int do_verify(const VerifyArgs &args, const SearchOptions &search, std::ostream &out, std::ostream &err) {
  CensusOptions options;
  options.threads = args.threads;
  options.search = search;
  const VerifyReport report = verify(args.max_n, options);
  out << render(report);
  for (const auto &w : report.warnings) err << "warning: " << w << "\n";
  return report.all_passed() ? kExitOk : kExitDomainError;
}

struct ExportArgs {
  std::string family;
  int n = 0, k = 0;
  std::string format = "g6";
};

int do_export(const ExportArgs &args, std::ostream &out) {
  Graph g;
  std::optional<std::vector<std::string>> labels;
  std::string name = args.family;
  if (args.family == "h") {
    g = h_graph();
  } else {
    const GpParams p(args.n, args.k);
    if (args.family == "gp") {
      g = gp(p);
      labels = gp_labels(p);
    } else if (args.family == "cplus") {
      g = lcf(c_plus(p));
    } else {
      g = lcf(c_minus(p));
    }
  }
  if (args.format == "dot") {
    out << to_dot(g, labels, name);
  } else {
    out << encode_graph6(g) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Kronecker covers among generalized Petersen graphs", "gpkc"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  ClassifyArgs classify_args;
  auto *classify_cmd = app.add_subcommand("classify", "decide whether GP(n,k) is a Kronecker cover");
  classify_cmd->add_option("--n", classify_args.n, "n")->required();
  classify_cmd->add_option("--k", classify_args.k, "k")->required();
  classify_cmd->add_flag("--json", classify_args.json, "JSON output");
  classify_cmd->add_flag("--ascii", classify_args.ascii, "ASCII involution words");

  QuotientArgs quotient_args;
  auto *quotient_cmd = app.add_subcommand("quotient", "quotient of GP(n,k) as graph6");
  quotient_cmd->add_option("--n", quotient_args.n, "n")->required();
  quotient_cmd->add_option("--k", quotient_args.k, "k")->required();
  quotient_cmd->add_option("--a", quotient_args.a, "shift of the involution (default: canonical)");
  quotient_cmd->add_option("--dot", quotient_args.dot, "also write DOT to this file");

  KcArgs kc_args;
  auto *kc_cmd = app.add_subcommand("kc", "Kronecker cover as graph6");
  auto *kc_gp = kc_cmd->add_option("--gp", kc_args.gp_pair, "N,K");
  auto *kc_g6 = kc_cmd->add_option("--g6", kc_args.g6, "graph6 input");
  kc_gp->excludes(kc_g6);
  kc_cmd->require_option(1);

  CensusArgs census_args;
  auto *census_cmd = app.add_subcommand("census", "classifier census as CSV or JSON");
  census_cmd->add_option("--max-n", census_args.max_n, "largest n")->required()->check(CLI::Range(3, 100000));
  census_cmd->add_option("--min-n", census_args.min_n, "smallest n")->check(CLI::Range(3, 100000));
  census_cmd->add_flag("--oracle", census_args.oracle, "cross-check with the search oracle");
  census_cmd->add_flag("--verbose", census_args.verbose, "include non-bipartite rows");
  census_cmd->add_flag("--ascii", census_args.ascii, "ASCII involution words");
  census_cmd->add_option("--threads", census_args.threads, "worker threads (0: all cores)");
  census_cmd->add_option("--out", census_args.out_path, "FILE.csv or FILE.json (default: CSV on stdout)");

  VerifyArgs verify_args;
  auto *verify_cmd = app.add_subcommand("verify", "classifier versus oracle report");
  verify_cmd->add_option("--max-n", verify_args.max_n, "largest n")->required()->check(CLI::Range(3, 60));
  verify_cmd->add_option("--threads", verify_args.threads, "worker threads (0: all cores)");

  ExportArgs export_args;
  auto *export_cmd = app.add_subcommand("export", "write a named graph");
  export_cmd->add_option("--family", export_args.family, "gp, cplus, cminus or h")
      ->required()
      ->check(CLI::IsMember({"gp", "cplus", "cminus", "h"}));
  export_cmd->add_option("--n", export_args.n, "n");
  export_cmd->add_option("--k", export_args.k, "k");
  export_cmd->add_option("--format", export_args.format, "g6 or dot")->check(CLI::IsMember({"g6", "dot"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (export_cmd->parsed() && export_args.family != "h" &&
        (export_cmd->count("--n") == 0 || export_cmd->count("--k") == 0)) {
      throw UsageError("export --family " + export_args.family + " requires --n and --k");
    }
    if (census_cmd->parsed() && census_args.min_n > census_args.max_n) {
      throw UsageError("census: --min-n exceeds --max-n");
    }
    const SearchOptions search = search_options_from_env();

    if (classify_cmd->parsed()) return do_classify(classify_args, search, out);
    if (quotient_cmd->parsed()) return do_quotient(quotient_args, out);
    if (kc_cmd->parsed()) return do_kc(kc_args, out);
    if (census_cmd->parsed()) return do_census(census_args, search, out);
    if (verify_cmd->parsed()) return do_verify(verify_args, search, out, err);
    return do_export(export_args, out);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace gpkc

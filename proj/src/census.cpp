// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gpkc/covers.hpp"
#include "gpkc/graph6.hpp"

namespace gpkc {
namespace {

std::string gp_name(int n, int k) { return "GP(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

std::string join(const std::vector<std::string> &parts, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<GpParams> keys(int n_min, int n_max) {
  std::vector<GpParams> out;
  for (int n = std::max(n_min, 3); n <= n_max; ++n) {
    for (int k = 1; 2 * k < n; ++k) out.emplace_back(n, k);
  }
  return out;
}

// Evaluates fn on every index from worker threads; result i is fn(i).
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)> &fn) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(count);
  for (auto &s : slots) out.push_back(std::move(*s));
  return out;
}

std::string vertex_name(int n, Vertex x) { return x < n ? "u" + std::to_string(x) : "v" + std::to_string(x - n); }

// Word for an automorphism of GP(n,k) when it is one of the standard
// generators' products or Delta; cycle notation otherwise.
std::string word_for(const GpParams &p, const Permutation &w, bool ascii) {
  const int c_max = gamma_kind(p.n(), p.k()) == GammaKind::kNone ? 1 : 2;
  for (int c = 0; c < c_max; ++c) {
    for (int b = 0; b < 2; ++b) {
      for (int a = 0; a < p.n(); ++a) {
        const CanonicalTriple t{a, b, c};
        if (from_triple(p.n(), p.k(), t) == w) return render_triple(t, ascii);
      }
    }
  }
  if (p == GpParams(10, 3) && w == delta_10_3()) return render(DeltaMarker{}, ascii);
  return "perm:" + cycle_notation(w);
}

std::vector<std::string> g6_list(const std::vector<std::string> &forms) {
  std::vector<std::string> out;
  for (const auto &f : forms) out.push_back("g6:" + f);
  return out;
}

std::string no_cover_note(const GpParams &p) {
  const auto q = q_value(p.n(), p.k());
  if (!q) return "k^2 != 1 (mod n)";
  return "Q=" + std::to_string(*q) + " is odd";
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string optional_text(const std::optional<bool> &b) { return b ? (*b ? "true" : "false") : ""; }

bool contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

OracleVerdict oracle_verdict(const GpParams &p, const SearchOptions &options) {
  OracleVerdict v;
  const Graph g = gp(p);
  v.involutions = kronecker_involutions(g, options);
  for (const Permutation &w : v.involutions) {
    std::string form = canonical_form(quotient(g, w), options);
    if (!contains(v.quotient_forms, form)) v.quotient_forms.push_back(std::move(form));
  }
  return v;
}

std::string exceptional_8_3_note(bool ascii, const SearchOptions &options) {
  const GpParams p(8, 3);
  const Graph g = gp(p);
  const Bipartition bip = *bipartition(g);
  const auto autos = automorphisms(g, options);
  int candidates = 0, edge_fixing = 0, kronecker = 0;
  for (const Permutation &w : autos) {
    const InvolutionProfile profile = involution_profile(g, bip, w);
    if (!profile.is_involution || w.is_identity() || profile.fixed_vertices > 0 || !profile.color_reversing) continue;
    ++candidates;
    if (profile.fixed_edges > 0) {
      ++edge_fixing;
    } else {
      ++kronecker;
    }
  }
  const CanonicalTriple listed{4, 1, 1};
  const Permutation w = from_triple(p.n(), p.k(), listed);
  std::string fixed_edge = "none";
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.has_edge(x, w(x))) {
      fixed_edge = vertex_name(p.n(), x) + vertex_name(p.n(), w(x));
      break;
    }
  }
  const LcfSpec spec = c_minus(p);
  const auto zeros = std::count(spec.jumps.begin(), spec.jumps.end(), 0);

  std::ostringstream out;
  out << "listed cover (" << render_triple(listed, ascii) << ", quotient C-(8,3)) does not exist: search finds "
      << kronecker << " Kronecker involutions among " << autos.size() << " automorphisms; " << edge_fixing
      << " of " << candidates << " fixed-point-free color-reversing involutions fix an edge; " << render_triple(listed, ascii) << " fixes edge " << fixed_edge << "; C-(8,3)=" << spec.to_string()
      << " has " << zeros << " zero jumps; GP(8,3)=g6:" << encode_graph6(g);
  return out.str();
}

CensusRow census_row(const GpParams &p, const CensusOptions &options) {
  const Classification c = classify(p);
  CensusRow row;
  row.n = p.n();
  row.k = p.k();
  row.tag = c.tag;
  row.quotient = "none";
  row.involution = "none";
  if (c.cover == CoverClaim::kYes) {
    std::vector<std::string> q, w;
    for (const auto &d : c.quotients) q.push_back(describe(d));
    for (const auto &d : c.involutions) w.push_back(render(d, options.ascii));
    row.quotient = join(q, ";");
    row.involution = join(w, ";");
  } else if (c.cover == CoverClaim::kDeferred) {
    row.quotient = "oracle";
    row.involution = "oracle";
  } else if (c.tag == CaseTag::kNoCover) {
    row.notes = no_cover_note(p);
  }
  if (!options.with_oracle) return row;

  const OracleVerdict v = oracle_verdict(p, options.search);
  row.oracle_cover = !v.involutions.empty();
  row.oracle_classes = static_cast<int>(v.quotient_forms.size());

  bool agree;
  if (c.cover == CoverClaim::kDeferred) {
    // One involution per quotient class, first found.
    std::vector<std::string> words;
    std::vector<std::string> seen;
    const Graph g = gp(p);
    for (const Permutation &w : v.involutions) {
      std::string form = canonical_form(quotient(g, w), options.search);
      if (contains(seen, form)) continue;
      seen.push_back(std::move(form));
      words.push_back(word_for(p, w, options.ascii));
    }
    row.quotient = v.quotient_forms.empty() ? "none" : join(g6_list(v.quotient_forms), ";");
    row.involution = words.empty() ? "none" : join(words, ";");
    agree = true;
  } else {
    agree = (c.cover == CoverClaim::kYes) == *row.oracle_cover;
    if (agree && c.cover == CoverClaim::kYes) {
      agree = c.quotients.size() == v.quotient_forms.size();
      for (const auto &d : c.quotients) agree = agree && contains(v.quotient_forms, canonical_form(materialize(d)));
    }
  }
  row.agree = agree;
  if (p == GpParams(8, 3)) row.notes = exceptional_8_3_note(options.ascii, options.search);
  if (!agree) {
    if (!row.notes.empty()) row.notes += "; ";
    row.notes += "disagreement: GP=g6:" + encode_graph6(gp(p)) + "; oracle quotients=" +
                 (v.quotient_forms.empty() ? "none" : join(g6_list(v.quotient_forms), "|"));
  }
  return row;
}

std::vector<CensusRow> census(int n_min, int n_max, const CensusOptions &options) {
  std::vector<GpParams> all = keys(n_min, n_max);
  if (!options.verbose) {
    std::erase_if(all, [](const GpParams &p) { return p.n() % 2 != 0 || p.k() % 2 == 0; });
  }
  return parallel_map<CensusRow>(all.size(), options.threads,
                                 [&](std::size_t i) { return census_row(all[i], options); });
}

std::string to_csv(const std::vector<CensusRow> &rows) {
  std::string out = "n,k,case,involution,quotient,oracle_cover,oracle_classes,agree,notes\n";
  for (const CensusRow &r : rows) {
    const std::vector<std::string> fields = {
        std::to_string(r.n),
        std::to_string(r.k),
        std::string(tag_name(r.tag)),
        r.involution,
        r.quotient,
        optional_text(r.oracle_cover),
        r.oracle_classes ? std::to_string(*r.oracle_classes) : "",
        optional_text(r.agree),
        r.notes,
    };
    std::vector<std::string> quoted;
    for (const auto &f : fields) quoted.push_back(csv_field(f));
    out += join(quoted, ",") + "\n";
  }
  return out;
}

std::string to_json(const std::vector<CensusRow> &rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const CensusRow &r : rows) {
    nlohmann::ordered_json o;
    o["n"] = r.n;
    o["k"] = r.k;
    o["case"] = tag_name(r.tag);
    o["involution"] = r.involution;
    o["quotient"] = r.quotient;
    o["oracle_cover"] = r.oracle_cover ? nlohmann::ordered_json(*r.oracle_cover) : nullptr;
    o["oracle_classes"] = r.oracle_classes ? nlohmann::ordered_json(*r.oracle_classes) : nullptr;
    o["agree"] = r.agree ? nlohmann::ordered_json(*r.agree) : nullptr;
    o["notes"] = r.notes;
    doc.push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto &c) { return !c.passed; }));
}

namespace {

struct KeyReport {
  std::vector<VerifyCheck> checks;
  std::vector<std::string> warnings;
};

KeyReport verify_key(const GpParams &p, const CensusOptions &options) {
  KeyReport out;
  const std::string name = gp_name(p.n(), p.k());
  const Graph g = gp(p);
  const std::string evidence_g = "GP=g6:" + encode_graph6(g);
  const Classification c = classify(p);
  const OracleVerdict v = oracle_verdict(p, options.search);
  const bool oracle_cover = !v.involutions.empty();
  auto add = [&out, &name](const std::string &what, bool passed, const std::string &evidence) {
    out.checks.push_back({what + " " + name, passed, passed ? "" : evidence});
  };
  const std::string oracle_evidence =
      "; oracle quotients=" + (v.quotient_forms.empty() ? std::string("none") : join(g6_list(v.quotient_forms), "|"));

  if (c.cover == CoverClaim::kDeferred) {
    add("cover", true, "");
    if (p == GpParams(8, 3) && !oracle_cover) out.warnings.push_back(name + ": " + exceptional_8_3_note(options.ascii, options.search));
  } else {
    const bool claimed = c.cover == CoverClaim::kYes;
    add("cover", claimed == oracle_cover,
        "classifier says " + std::string(claimed ? "cover" : "no cover") + ", oracle found " +
            std::to_string(v.involutions.size()) + " involutions; " + evidence_g);
  }

  // The round trip is checked for every class the oracle finds.
  for (std::size_t i = 0; i < v.quotient_forms.size(); ++i) {
    const Graph q = decode_graph6(v.quotient_forms[i]);
    add("round trip " + std::to_string(i + 1), is_isomorphic(kronecker_cover(q), g, options.search),
        evidence_g + "; quotient=g6:" + v.quotient_forms[i]);
  }
  if (c.cover != CoverClaim::kYes) return out;

  add("classes", c.quotients.size() == v.quotient_forms.size(),
      "classifier " + std::to_string(c.quotients.size()) + ", oracle " + std::to_string(v.quotient_forms.size()) + "; " +
          evidence_g + oracle_evidence);
  for (std::size_t i = 0; i < c.quotients.size(); ++i) {
    const Graph q = materialize(c.quotients[i]);
    const std::string form = canonical_form(q, options.search);
    add("quotient " + describe(c.quotients[i]), contains(v.quotient_forms, form),
        "classifier quotient=g6:" + encode_graph6(q) + "; " + evidence_g + oracle_evidence);
    const Permutation w = materialize(p, c.involutions[i]);
    const bool ok = is_kronecker_involution(g, w) && is_isomorphic(quotient(g, w), q, options.search);
    add("involution " + render(c.involutions[i], true), ok,
        "involution " + cycle_notation(w) + " (" + std::string(describe(check_kronecker_involution(g, w))) + "); " +
            evidence_g);
  }
  return out;
}

}  // namespace

VerifyReport verify(int n_max, const CensusOptions &options) {
  if (n_max > 60) throw DomainError("verify requires n_max <= 60");
  const std::vector<GpParams> all = keys(3, n_max);
  const auto parts = parallel_map<KeyReport>(all.size(), options.threads,
                                             [&](std::size_t i) { return verify_key(all[i], options); });
  VerifyReport report;
  for (const auto &part : parts) {
    report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
    report.warnings.insert(report.warnings.end(), part.warnings.begin(), part.warnings.end());
  }

  if (n_max >= 10) {
    const auto classes = quotients_up_to_iso(gp(GpParams(10, 3)), options.search);
    bool ok = classes.size() == 2;
    if (ok) {
      const std::string a = canonical_form(classes[0], options.search), b = canonical_form(classes[1], options.search);
      const std::string petersen = canonical_form(gp(GpParams(5, 2)), options.search);
      const std::string h = canonical_form(h_graph(), options.search);
      ok = (a == petersen && b == h) || (a == h && b == petersen);
    }
    std::string evidence;
    for (const Graph &q : classes) evidence += "g6:" + encode_graph6(q) + " ";
    report.checks.push_back({"GP(10,3) has exactly 2 quotient classes, Petersen and H", ok, ok ? "" : evidence});
  }
  if (n_max >= 24) {
    const GpParams p(24, 5);
    const bool ok = symmetry_class(p).cayley && classify(p).cover == CoverClaim::kNo &&
                    kronecker_involutions(gp(p), options.search).empty();
    report.checks.push_back({"GP(24,5) is Cayley and not a Kronecker cover", ok, ok ? "" : "GP=g6:" + encode_graph6(gp(p))});
  }

  // KC(GP(n,k)) is again a generalized Petersen graph exactly when n is odd.
  const int corollary_max = std::min(n_max, 15);
  for (int n = 3; n <= corollary_max; ++n) {
    std::vector<std::string> targets;
    for (int j = 1; j < n; ++j) targets.push_back(canonical_form(gp(GpParams(2 * n, j)), options.search));
    for (int k = 1; 2 * k < n; ++k) {
      const Graph kc = kronecker_cover(gp(GpParams(n, k)));
      const bool is_gp = is_connected(kc) && contains(targets, canonical_form(kc, options.search));
      const bool ok = is_gp == (n % 2 == 1);
      report.checks.push_back({"KC is GP iff n odd " + gp_name(n, k), ok, ok ? "" : "KC=g6:" + encode_graph6(kc)});
    }
  }
  return report;
}

std::string render(const VerifyReport &report) {
  std::string out;
  for (const VerifyCheck &c : report.checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name + (c.passed ? "" : ": " + c.evidence) + "\n";
  }
  for (const auto &w : report.warnings) out += "WARN " + w + "\n";
  out += std::to_string(report.checks.size()) + " checks, " + std::to_string(report.failures()) + " failed, " +
         std::to_string(report.warnings.size()) + " warnings\n";
  return out;
}

}  // namespace gpkc

#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "commute/catalog.hpp"
#include "commute/errors.hpp"
#include "commute/families.hpp"
#include "commute/graph.hpp"
#include "commute/group.hpp"
#include "commute/predictions.hpp"
#include "commute/spectrum.hpp"

namespace commute {

// How one published claim fared against the measured graph.
//
//   Match          claim agrees with the measurement
//   PaperSlip      the measurement contradicts the claim in a way that
//                  pins the claim as a misprint: either its spectrum and
//                  energy disagree with each other and the spectrum side is
//                  what the graph shows, or its printed multiplicities are
//                  impossible for the vertex count while everything else
//                  matches
//   Fail           the measurement contradicts the claim outright
//   NotApplicable  no oracle measurement was available under the caps
enum class Classification { Match, PaperSlip, Fail, NotApplicable };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::Match: return "MATCH";
    case Classification::PaperSlip: return "PAPER_SLIP";
    case Classification::Fail: return "FAIL";
    case Classification::NotApplicable: return "NOT_APPLICABLE";
  }
  throw InternalError("unknown classification");
}

// Registry of claims already known to be misprinted, loaded from a JSON data
// file so the list lives outside the code.  Entries carry the prediction
// source tag and which field ("energy" or "spectrum") is wrong.
class SlipCatalog {
 public:
  struct Entry {
    std::string source;
    std::string field;
    std::string note;
  };

  static SlipCatalog load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open slip table '" + path + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw Error("cannot parse slip table '" + path + "': " + e.what());
    }
    if (!doc.is_object() || doc.value("schema", 0) != 1 ||
        !doc.contains("slips") || !doc["slips"].is_array()) {
      throw Error("slip table '" + path +
                  "' must be an object with schema 1 and a 'slips' array");
    }
    SlipCatalog cat;
    cat.path_ = path;
    cat.loaded_ = true;
    for (const auto& item : doc["slips"]) {
      Entry e;
      e.source = item.value("source", "");
      e.field = item.value("field", "");
      e.note = item.value("note", "");
      if (e.source.empty() || (e.field != "energy" && e.field != "spectrum")) {
        throw Error("slip table entry needs a source and a field of "
                    "'energy' or 'spectrum'");
      }
      cat.entries_.push_back(std::move(e));
    }
    return cat;
  }

  // Resolution order: explicit path, ./data/known_paper_slips.json,
  // then the build-time data directory.  Missing files yield an empty
  // catalog; a present-but-invalid file is an error.
  static SlipCatalog resolve(const std::string& explicit_path) {
    if (!explicit_path.empty()) return load_file(explicit_path);
    const char* candidates[] = {
      "data/known_paper_slips.json",
#ifdef COMMUTE_SPECTRA_DATA_DIR
      COMMUTE_SPECTRA_DATA_DIR "/known_paper_slips.json",
#endif
    };
    for (const char* c : candidates) {
      std::ifstream probe(c);
      if (probe) return load_file(c);
    }
    return SlipCatalog{};
  }

  bool loaded() const { return loaded_; }
  const std::string& path() const { return path_; }
  const std::vector<Entry>& entries() const { return entries_; }

  bool expects(const std::string& source, const std::string& field) const {
    for (const auto& e : entries_) {
      if (e.source == source && e.field == field) return true;
    }
    return false;
  }

 private:
  std::vector<Entry> entries_;
  std::string path_;
  bool loaded_ = false;
};

struct PredictionOutcome {
  Prediction prediction;
  Classification classification = Classification::NotApplicable;
  bool expected_slip = false;
  std::string detail;
};

struct VerificationReport {
  std::string spec_text;
  std::string group_name;
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t class_count = 0;
  std::uint64_t centralizer_count = 0;
  bool is_ac = false;
  bool clique_union = false;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::vector<std::uint64_t> clique_sizes;  // largest first, when clique_union

  bool oracle_available = false;
  Spectrum oracle_spectrum;
  std::optional<long long> oracle_energy_exact;
  double oracle_energy = 0.0;
  std::string oracle_method;  // "clique-union" or "numeric"
  std::string numeric_note;   // cross-check status of the dense eigensolver

  std::vector<PredictionOutcome> rows;
  double elapsed_ms = 0.0;  // shown in tables, excluded from JSON

  bool any_fail() const {
    for (const auto& r : rows) {
      if (r.classification == Classification::Fail) return true;
    }
    return false;
  }
};

struct VerifyOptions {
  std::uint32_t max_order = kDefaultMaxOrder;
  std::uint64_t max_oracle_vertices = 2000;
  SlipCatalog slips;
};

namespace detail {

// Expands a spectrum to the flat ascending eigenvalue list.
inline std::vector<double> expand_spectrum(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& e : s.entries()) {
    for (long long i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
  }
  return out;
}

// True when the two exact spectra agree on every eigenvalue other than -1.
inline bool non_minus_one_entries_match(const Spectrum& a, const Spectrum& b) {
  std::vector<std::pair<long long, long long>> ea, eb;
  for (const auto& e : a.entries()) {
    if (e.int_value != -1) ea.emplace_back(e.int_value, e.multiplicity);
  }
  for (const auto& e : b.entries()) {
    if (e.int_value != -1) eb.emplace_back(e.int_value, e.multiplicity);
  }
  return ea == eb;
}

inline long long minus_one_multiplicity(const Spectrum& s) {
  for (const auto& e : s.entries()) {
    if (e.int_value == -1) return e.multiplicity;
  }
  return 0;
}

inline PredictionOutcome classify(const Prediction& pred,
                                  const VerificationReport& report,
                                  const SlipCatalog& slips) {
  PredictionOutcome out;
  out.prediction = pred;
  if (!report.oracle_available) {
    out.classification = Classification::NotApplicable;
    out.detail = "no oracle spectrum available within the vertex cap";
    return out;
  }

  // Claims of the form "energy is one of ...".
  if (!pred.admissible_energies.empty()) {
    bool member = false;
    for (long long e : pred.admissible_energies) {
      if (report.oracle_energy_exact
              ? *report.oracle_energy_exact == e
              : std::abs(report.oracle_energy - static_cast<double>(e)) < 1e-6) {
        member = true;
        break;
      }
    }
    if (member) {
      out.classification = Classification::Match;
      out.detail = "measured energy is admissible";
    } else {
      out.classification = Classification::Fail;
      out.detail = "measured energy is not among the admissible values";
    }
    return out;
  }

  bool spectrum_matches = true;  // vacuous when the claim has no spectrum
  bool spectrum_slip = false;
  if (pred.spectrum) {
    if (!report.oracle_spectrum.integer_exact()) {
      out.classification = Classification::Fail;
      out.detail = "claim asserts an integer spectrum but the measured "
                   "spectrum is not integral";
      return out;
    }
    if (*pred.spectrum == report.oracle_spectrum) {
      spectrum_matches = true;
    } else if (non_minus_one_entries_match(*pred.spectrum,
                                           report.oracle_spectrum) &&
               pred.spectrum->multiplicity_total() !=
                   static_cast<long long>(report.vertex_count) &&
               report.oracle_spectrum.multiplicity_total() ==
                   static_cast<long long>(report.vertex_count)) {
      // Every entry other than -1 agrees, and the printed multiplicities do
      // not even sum to the vertex count: the printed -1 exponent is
      // impossible, so the claim is a misprint rather than a failed check.
      spectrum_matches = false;
      spectrum_slip = true;
    } else {
      out.classification = Classification::Fail;
      out.detail = "tabulated spectrum " + pred.spectrum->render() +
                   " differs from measured " + report.oracle_spectrum.render();
      return out;
    }
  }

  bool energy_matches = true;  // vacuous when the claim has no printed energy
  if (pred.energy_printed) {
    if (report.oracle_energy_exact) {
      energy_matches = *pred.energy_printed == *report.oracle_energy_exact;
    } else {
      energy_matches = std::abs(static_cast<double>(*pred.energy_printed) -
                                report.oracle_energy) < 1e-6;
    }
  }

  if (spectrum_slip) {
    out.classification = Classification::PaperSlip;
    out.detail = "tabulated -1 multiplicity " +
                 std::to_string(minus_one_multiplicity(*pred.spectrum)) +
                 " cannot fit the " + std::to_string(report.vertex_count) +
                 "-vertex graph (multiplicities sum to " +
                 std::to_string(pred.spectrum->multiplicity_total()) +
                 "); measured multiplicity is " +
                 std::to_string(minus_one_multiplicity(report.oracle_spectrum));
    out.expected_slip = slips.expects(pred.source, "spectrum");
    return out;
  }
  if (!energy_matches) {
    if (pred.spectrum && spectrum_matches) {
      // The printed spectrum is confirmed by the graph, so the lone energy
      // figure beside it is the misprint.
      out.classification = Classification::PaperSlip;
      out.detail =
          "spectra agree but the tabulated energy " +
          std::to_string(*pred.energy_printed) + " differs from the measured " +
          (report.oracle_energy_exact
               ? std::to_string(*report.oracle_energy_exact)
               : std::to_string(report.oracle_energy));
      out.expected_slip = slips.expects(pred.source, "energy");
    } else {
      out.classification = Classification::Fail;
      out.detail =
          "tabulated energy " + std::to_string(*pred.energy_printed) +
          " differs from the measured " +
          (report.oracle_energy_exact
               ? std::to_string(*report.oracle_energy_exact)
               : std::to_string(report.oracle_energy));
    }
    return out;
  }

  out.classification = Classification::Match;
  if (pred.spectrum && pred.energy_printed) {
    out.detail = "spectrum and energy agree with the measured graph";
  } else if (pred.spectrum) {
    out.detail = "spectrum agrees with the measured graph";
  } else {
    out.detail = "energy agrees with the measured graph";
  }
  return out;
}

}  // namespace detail

// Full verification pipeline for one spec: construct the group, build the
// commuting graph, measure the spectrum (combinatorially when the graph is a
// union of cliques, numerically otherwise, with the dense eigensolver
// cross-checking the combinatorial route), then test every applicable
// published claim against the measurement.
inline VerificationReport verify_spec(const FamilySpec& spec,
                                      const VerifyOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.spec_text = render(spec);

  ConstructOptions copt{opt.max_order};
  FiniteGroup g = construct(spec, copt);
  rep.group_name = g.name();
  rep.order = g.order();

  CommutingGraph graph = CommutingGraph::commuting(g);  // rejects abelian
  CentralizerPartition part = g.centralizer_partition();
  std::uint64_t class_count = g.class_count();
  rep.center_order = part.center.size();
  rep.class_count = class_count;
  rep.centralizer_count = part.count_total;
  rep.vertex_count = graph.vertex_count();
  rep.edge_count = graph.edge_count();

  // Identity check: the centralizer orders of the non-central elements must
  // sum to |G| (k - |Z|); this ties the partition to the class count.
  std::uint64_t lhs = g.noncentral_centralizer_order_sum();
  std::uint64_t rhs = static_cast<std::uint64_t>(g.order()) *
                      (class_count - part.center.size());
  if (lhs != rhs) {
    throw InternalError("centralizer-sum identity violated: " +
                        std::to_string(lhs) + " != " + std::to_string(rhs));
  }

  CliqueDecomposition dec = graph.clique_decomposition();
  rep.clique_union = dec.is_clique_union;
  rep.is_ac = g.is_ac_group();
  if (rep.is_ac != rep.clique_union) {
    throw InternalError(
        "clique-union structure must coincide with all centralizers abelian");
  }
  if (rep.clique_union) rep.clique_sizes = dec.component_sizes;

  if (rep.clique_union) {
    rep.oracle_spectrum = clique_union_spectrum(dec.component_sizes);
    Spectrum from_partition = ac_spectrum(g);
    if (from_partition != rep.oracle_spectrum) {
      throw InternalError(
          "partition spectrum disagrees with component spectrum");
    }
    rep.oracle_available = true;
    rep.oracle_method = "clique-union";
    rep.oracle_energy_exact = rep.oracle_spectrum.exact_energy();
    rep.oracle_energy = static_cast<double>(*rep.oracle_energy_exact);
    if (rep.vertex_count <= opt.max_oracle_vertices) {
      std::vector<double> numeric = numeric_eigenvalues(graph, opt.max_oracle_vertices);
      std::vector<double> exact = detail::expand_spectrum(rep.oracle_spectrum);
      if (numeric.size() != exact.size()) {
        throw InternalError("eigenvalue count mismatch");
      }
      double worst = 0.0;
      for (std::size_t i = 0; i < numeric.size(); ++i) {
        worst = std::max(worst, std::abs(numeric[i] - exact[i]));
      }
      if (worst > 1e-6) {
        throw InternalError(
            "dense eigensolver deviates from the combinatorial spectrum by " +
            std::to_string(worst));
      }
      Spectrum snapped = snap_spectrum(
          numeric, 1e-9 * std::max<double>(1.0, static_cast<double>(numeric.size())));
      if (snapped != rep.oracle_spectrum) {
        throw InternalError("snapped numeric spectrum disagrees with the "
                            "combinatorial spectrum");
      }
      rep.numeric_note = "agrees with the combinatorial spectrum (max deviation " +
                         std::to_string(worst) + ")";
    } else {
      rep.numeric_note = "skipped (" + std::to_string(rep.vertex_count) +
                         " vertices above the cap of " +
                         std::to_string(opt.max_oracle_vertices) + ")";
    }
  } else {
    if (rep.vertex_count <= opt.max_oracle_vertices) {
      rep.oracle_spectrum = numeric_spectrum(graph, opt.max_oracle_vertices);
      rep.oracle_available = true;
      rep.oracle_method = "numeric";
      if (rep.oracle_spectrum.integer_exact()) {
        rep.oracle_energy_exact = rep.oracle_spectrum.exact_energy();
        rep.oracle_energy = static_cast<double>(*rep.oracle_energy_exact);
      } else {
        rep.oracle_energy = rep.oracle_spectrum.energy();
      }
      rep.numeric_note = "numeric oracle (no clique structure)";
    } else {
      rep.oracle_available = false;
      rep.numeric_note = "skipped (" + std::to_string(rep.vertex_count) +
                         " vertices above the cap of " +
                         std::to_string(opt.max_oracle_vertices) + ")";
    }
  }

  // Assemble the applicable claims in a stable order.
  std::vector<Prediction> preds;
  if (auto fam = predict_family(spec)) preds.push_back(std::move(*fam));
  if (rep.is_ac) preds.push_back(predict_ac(g, part, class_count));
  for (auto& p : predict_quotient(g, part)) preds.push_back(std::move(p));
  for (auto& p : predict_centralizer_class(g, part)) preds.push_back(std::move(p));
  if (auto prod = predict_product(spec, copt)) preds.push_back(std::move(*prod));

  for (const auto& p : preds) {
    rep.rows.push_back(detail::classify(p, rep, opt.slips));
  }

  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

// Runs the whole catalog, optionally across a small worker pool; results are
// returned in catalog order regardless of the thread count.
inline std::vector<VerificationReport> verify_catalog(const VerifyOptions& opt,
                                                      unsigned threads = 1) {
  std::vector<FamilySpec> specs = formula_catalog();
  std::vector<VerificationReport> reports(specs.size());
  std::vector<std::exception_ptr> failures(specs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) {
      reports[i] = verify_spec(specs[i], opt);
    }
    return reports;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      try {
        reports[i] = verify_spec(specs[i], opt);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(specs.size()));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return reports;
}

}  // namespace commute

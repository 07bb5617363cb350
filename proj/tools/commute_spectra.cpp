// commute-spectra: exact spectra and energies of commuting graphs of finite
// groups, with verification of the published closed forms.
//
// Verbs:
//   info SPEC          group and commuting-graph summary
//   spectrum SPEC      measured spectrum and energy
//   graph-dump SPEC    adjacency dump (tab-separated, one vertex per line)
//   verify [SPEC|--all]  test tabulated claims against measurements
//   list-catalog       the specs verify --all runs
//
// Exit codes: 0 success (and no FAIL rows), 1 verification produced FAIL
// rows, 2 bad input or usage, 3 internal error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "commute/catalog.hpp"
#include "commute/errors.hpp"
#include "commute/families.hpp"
#include "commute/graph.hpp"
#include "commute/render.hpp"
#include "commute/spec_parser.hpp"
#include "commute/spectrum.hpp"
#include "commute/verify.hpp"

namespace {

unsigned worker_threads() {
  if (const char* env = std::getenv("COMMUTE_SPECTRA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 256) {
      throw commute::ConstraintError(
          "COMMUTE_SPECTRA_THREADS must be an integer between 1 and 256");
    }
    return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::min(hw, 8u);
}

struct GroupSummary {
  commute::FamilySpec spec;
  commute::FiniteGroup group;
  bool abelian = false;
};

GroupSummary build(const std::string& text, std::uint32_t max_order) {
  commute::FamilySpec spec = commute::parse_spec(text);
  commute::ConstructOptions opt{max_order};
  commute::FiniteGroup g = commute::construct(spec, opt);
  return GroupSummary{std::move(spec), std::move(g), false};
}

int cmd_info(const std::string& text, std::uint32_t max_order,
             commute::OutputFormat fmt) {
  using commute::OutputFormat;
  GroupSummary s = build(text, max_order);
  const commute::FiniteGroup& g = s.group;
  bool abelian = g.is_abelian();
  std::uint64_t z = g.center().size();
  std::uint64_t k = g.class_count();

  std::uint64_t cent_count = 0, vertices = 0, edges = 0;
  bool ac = false, clique_union = false;
  std::vector<std::uint64_t> sizes;
  if (!abelian) {
    commute::CentralizerPartition part = g.centralizer_partition();
    cent_count = part.count_total;
    commute::CommutingGraph graph = commute::CommutingGraph::commuting(g);
    vertices = graph.vertex_count();
    edges = graph.edge_count();
    commute::CliqueDecomposition dec = graph.clique_decomposition();
    clique_union = dec.is_clique_union;
    ac = g.is_ac_group();
    if (clique_union) sizes = dec.component_sizes;
  }

  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["spec"] = commute::render(s.spec);
    j["group"] = g.name();
    j["order"] = g.order();
    j["abelian"] = abelian;
    j["center_order"] = z;
    j["class_count"] = k;
    if (!abelian) {
      j["centralizer_count"] = cent_count;
      j["is_ac"] = ac;
      j["vertex_count"] = vertices;
      j["edge_count"] = edges;
      j["clique_union"] = clique_union;
      j["clique_sizes"] = sizes;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (fmt == OutputFormat::Csv) {
    std::cout << "spec,group,order,abelian,center_order,class_count,"
                 "centralizer_count,is_ac,vertex_count,edge_count,clique_union\n";
    std::cout << commute::detail::csv_quote(commute::render(s.spec)) << ","
              << commute::detail::csv_quote(g.name()) << "," << g.order() << ","
              << (abelian ? "true" : "false") << "," << z << "," << k << ",";
    if (abelian) {
      std::cout << ",,,,\n";
    } else {
      std::cout << cent_count << "," << (ac ? "true" : "false") << ","
                << vertices << "," << edges << ","
                << (clique_union ? "true" : "false") << "\n";
    }
    return 0;
  }
  std::cout << "spec: " << commute::render(s.spec) << "\n";
  std::cout << "group: " << g.name() << "\n";
  std::cout << "order: " << g.order() << "\n";
  std::cout << "abelian: " << (abelian ? "yes" : "no") << "\n";
  std::cout << "center order: " << z << "\n";
  std::cout << "conjugacy classes: " << k << "\n";
  if (abelian) {
    std::cout << "commuting graph: undefined (no non-central elements)\n";
    return 0;
  }
  std::cout << "distinct centralizers: " << cent_count << "\n";
  std::cout << "all centralizers abelian: " << (ac ? "yes" : "no") << "\n";
  std::cout << "vertices: " << vertices << "\n";
  std::cout << "edges: " << edges << "\n";
  std::cout << "clique union: " << (clique_union ? "yes" : "no") << "\n";
  if (clique_union) {
    std::cout << "clique sizes: [";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << sizes[i];
    }
    std::cout << "]\n";
  }
  return 0;
}

int cmd_spectrum(const std::string& text, std::uint32_t max_order,
                 std::uint64_t max_vertices, commute::OutputFormat fmt) {
  using commute::OutputFormat;
  GroupSummary s = build(text, max_order);
  commute::CommutingGraph graph = commute::CommutingGraph::commuting(s.group);
  commute::CliqueDecomposition dec = graph.clique_decomposition();
  commute::Spectrum spectrum;
  std::string method;
  if (dec.is_clique_union) {
    spectrum = commute::clique_union_spectrum(dec.component_sizes);
    method = "clique-union";
  } else {
    spectrum = commute::numeric_spectrum(graph, max_vertices);
    method = "numeric";
  }
  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["spec"] = commute::render(s.spec);
    j["group"] = s.group.name();
    j["method"] = method;
    j["spectrum"] = commute::detail::spectrum_to_json(spectrum);
    if (spectrum.integer_exact()) {
      j["energy"] = spectrum.exact_energy();
    } else {
      j["energy"] = spectrum.energy();
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::string energy = spectrum.integer_exact()
                           ? std::to_string(spectrum.exact_energy())
                           : commute::detail::format_double(spectrum.energy());
  if (fmt == OutputFormat::Csv) {
    std::cout << "spec,group,method,spectrum,energy\n";
    std::cout << commute::detail::csv_quote(commute::render(s.spec)) << ","
              << commute::detail::csv_quote(s.group.name()) << "," << method
              << "," << commute::detail::csv_quote(spectrum.render()) << ","
              << energy << "\n";
    return 0;
  }
  std::cout << "spec: " << commute::render(s.spec) << "\n";
  std::cout << "group: " << s.group.name() << "\n";
  std::cout << "method: " << method << "\n";
  std::cout << "spectrum: " << spectrum.render() << "\n";
  std::cout << "energy: " << energy << "\n";
  return 0;
}

int cmd_graph_dump(const std::string& text, std::uint32_t max_order,
                   bool complement) {
  GroupSummary s = build(text, max_order);
  commute::CommutingGraph graph = commute::CommutingGraph::commuting(s.group);
  if (complement) graph = graph.complement();
  std::cout << graph.dump();
  return 0;
}

int cmd_list_catalog(commute::OutputFormat fmt) {
  using commute::OutputFormat;
  std::vector<commute::FamilySpec> specs = commute::formula_catalog();
  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& spec : specs) {
      nlohmann::ordered_json j;
      j["spec"] = commute::render(spec);
      j["group"] = commute::display_name(spec);
      j["order"] = commute::order_of(spec);
      arr.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["catalog"] = std::move(arr);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (fmt == OutputFormat::Csv) {
    std::cout << "spec,group,order\n";
    for (const auto& spec : specs) {
      std::cout << commute::detail::csv_quote(commute::render(spec)) << ","
                << commute::detail::csv_quote(commute::display_name(spec))
                << "," << commute::order_of(spec) << "\n";
    }
    return 0;
  }
  std::size_t i = 0;
  for (const auto& spec : specs) {
    std::string text = commute::render(spec);
    if (text.size() < 12) text += std::string(12 - text.size(), ' ');
    std::cout << ++i << "\t" << text << "\t" << commute::display_name(spec)
              << "\t order " << commute::order_of(spec) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& text, bool all,
               const commute::VerifyOptions& opt, commute::OutputFormat fmt) {
  using commute::OutputFormat;
  std::vector<commute::VerificationReport> reports;
  if (all) {
    reports = commute::verify_catalog(opt, worker_threads());
  } else {
    reports.push_back(commute::verify_spec(commute::parse_spec(text), opt));
  }
  if (fmt == OutputFormat::Json) {
    if (all) {
      std::cout << commute::catalog_to_json(reports).dump(2) << "\n";
    } else {
      std::cout << commute::report_to_json(reports[0]).dump(2) << "\n";
    }
  } else if (fmt == OutputFormat::Csv) {
    std::cout << commute::reports_to_csv(reports);
  } else {
    if (all) {
      std::cout << commute::catalog_to_table(reports);
    } else {
      std::cout << commute::report_to_table(reports[0]);
    }
  }
  for (const auto& r : reports) {
    if (r.any_fail()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra and energies of commuting graphs of finite groups"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "table";
  std::uint64_t max_order = commute::kDefaultMaxOrder;
  std::uint64_t max_vertices = 2000;
  std::string slips_path;
  app.add_option("--format", format, "output format: table, json, or csv")
      ->capture_default_str();
  app.add_option("--max-order", max_order, "largest group order to construct")
      ->capture_default_str();
  app.add_option("--max-oracle-vertices", max_vertices,
                 "largest vertex count for the dense eigensolver")
      ->capture_default_str();
  app.add_option("--slips", slips_path,
                 "path to the known-misprint table (JSON)");

  std::string spec_info, spec_spectrum, spec_dump, spec_verify;
  bool complement = false, verify_all = false;

  CLI::App* info = app.add_subcommand("info", "group and graph summary");
  info->add_option("spec", spec_info, "group spec, e.g. \"Q(8)\" or \"D(6)xZ(3)\"")
      ->required();

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "measured spectrum and energy");
  spectrum->add_option("spec", spec_spectrum, "group spec")->required();

  CLI::App* dump = app.add_subcommand(
      "graph-dump", "tab-separated adjacency dump, one vertex per line");
  dump->add_option("spec", spec_dump, "group spec")->required();
  dump->add_flag("--complement", complement,
                 "dump the non-commuting graph instead");

  CLI::App* verify = app.add_subcommand(
      "verify", "test tabulated claims against the measured graph");
  verify->add_option("spec", spec_verify, "group spec");
  verify->add_flag("--all", verify_all, "run the whole catalog");

  CLI::App* list =
      app.add_subcommand("list-catalog", "the specs verify --all runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    commute::OutputFormat fmt = commute::parse_format(format);
    if (max_order < 1 || max_order > 2000000) {
      throw commute::ConstraintError("--max-order must be between 1 and 2000000");
    }
    std::uint32_t mo = static_cast<std::uint32_t>(max_order);
    if (info->parsed()) return cmd_info(spec_info, mo, fmt);
    if (spectrum->parsed()) return cmd_spectrum(spec_spectrum, mo, max_vertices, fmt);
    if (dump->parsed()) return cmd_graph_dump(spec_dump, mo, complement);
    if (list->parsed()) return cmd_list_catalog(fmt);
    if (verify->parsed()) {
      if (verify_all && !spec_verify.empty()) {
        throw commute::ConstraintError(
            "verify takes either a spec argument or --all, not both");
      }
      if (!verify_all && spec_verify.empty()) {
        throw commute::ConstraintError(
            "verify needs a spec argument or --all");
      }
      commute::VerifyOptions vopt;
      vopt.max_order = mo;
      vopt.max_oracle_vertices = max_vertices;
      vopt.slips = commute::SlipCatalog::resolve(slips_path);
      return cmd_verify(spec_verify, verify_all, vopt, fmt);
    }
    throw commute::ConstraintError("no subcommand given");
  } catch (const commute::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const commute::ValidationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const commute::ConvergenceError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const commute::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

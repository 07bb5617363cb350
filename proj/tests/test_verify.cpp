#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include "commute/render.hpp"
#include "commute/spec_parser.hpp"
#include "commute/verify.hpp"

using namespace commute;

namespace {

const char* kSlipPath = COMMUTE_SPECTRA_DATA_DIR "/known_paper_slips.json";

VerifyOptions options_with_slips() {
  VerifyOptions opt;
  opt.slips = SlipCatalog::load_file(kSlipPath);
  return opt;
}

const PredictionOutcome* find_row(const VerificationReport& rep,
                                  const std::string& source) {
  for (const auto& row : rep.rows) {
    if (row.prediction.source == source) return &row;
  }
  return nullptr;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << body;
  return p;
}

}  // namespace

TEST_CASE("the slip table loads and answers membership queries", "[verify]") {
  SlipCatalog slips = SlipCatalog::load_file(kSlipPath);
  CHECK(slips.loaded());
  CHECK(slips.entries().size() == 4);
  CHECK(slips.expects("dicyclic-family", "energy"));
  CHECK(slips.expects("quotient-sz2", "energy"));
  CHECK(slips.expects("ac-theorem", "energy"));
  CHECK(slips.expects("pq-family", "spectrum"));
  CHECK_FALSE(slips.expects("dicyclic-family", "spectrum"));
  CHECK_FALSE(slips.expects("dihedral-family", "energy"));

  SlipCatalog empty;
  CHECK_FALSE(empty.loaded());
  CHECK_FALSE(empty.expects("dicyclic-family", "energy"));

  CHECK(SlipCatalog::resolve("").loaded());
  CHECK(SlipCatalog::resolve(kSlipPath).entries().size() == 4);
}

TEST_CASE("invalid slip tables are rejected", "[verify]") {
  CHECK_THROWS_AS(SlipCatalog::load_file("/nonexistent/slips.json"), Error);

  auto bad_json = write_temp("commute_slips_bad_json.json", "{not json");
  CHECK_THROWS_AS(SlipCatalog::load_file(bad_json.string()), Error);

  auto bad_schema = write_temp("commute_slips_bad_schema.json",
                               R"({"schema":2,"slips":[]})");
  CHECK_THROWS_AS(SlipCatalog::load_file(bad_schema.string()), Error);

  auto bad_field = write_temp(
      "commute_slips_bad_field.json",
      R"({"schema":1,"slips":[{"source":"x","field":"both"}]})");
  CHECK_THROWS_AS(SlipCatalog::load_file(bad_field.string()), Error);

  auto no_source = write_temp(
      "commute_slips_no_source.json",
      R"({"schema":1,"slips":[{"field":"energy"}]})");
  CHECK_THROWS_AS(SlipCatalog::load_file(no_source.string()), Error);
}

TEST_CASE("a fully confirmed report: all rows match", "[verify]") {
  VerificationReport rep = verify_spec(parse_spec("D(16)"), options_with_slips());
  CHECK(rep.spec_text == "D(16)");
  CHECK(rep.group_name == "D_16");
  CHECK(rep.order == 16);
  CHECK(rep.center_order == 2);
  CHECK(rep.is_ac);
  CHECK(rep.clique_union);
  CHECK(rep.vertex_count == 14);
  CHECK(rep.edge_count == 19);
  CHECK(rep.clique_sizes == std::vector<std::uint64_t>{6, 2, 2, 2, 2});
  CHECK(rep.oracle_method == "clique-union");
  CHECK(rep.oracle_spectrum == Spectrum::exact({{-1, 9}, {1, 4}, {5, 1}}));
  CHECK(*rep.oracle_energy_exact == 18);

  REQUIRE(rep.rows.size() == 3);
  const auto* fam = find_row(rep, "dihedral-family");
  REQUIRE(fam != nullptr);
  CHECK(fam->classification == Classification::Match);
  CHECK(fam->detail == "spectrum and energy agree with the measured graph");

  const auto* ac = find_row(rep, "ac-theorem");
  REQUIRE(ac != nullptr);
  CHECK(ac->classification == Classification::PaperSlip);
  CHECK(ac->expected_slip);

  const auto* quot = find_row(rep, "quotient-dihedral");
  REQUIRE(quot != nullptr);
  CHECK(quot->classification == Classification::Match);
  CHECK_FALSE(rep.any_fail());
}

TEST_CASE("a misprinted energy beside a confirmed spectrum is a slip",
          "[verify]") {
  VerificationReport rep = verify_spec(parse_spec("Q(8)"), options_with_slips());
  REQUIRE(rep.rows.size() == 5);

  const auto* fam = find_row(rep, "dicyclic-family");
  REQUIRE(fam != nullptr);
  CHECK(fam->classification == Classification::PaperSlip);
  CHECK(fam->expected_slip);
  CHECK(fam->detail ==
        "spectra agree but the tabulated energy 9 differs from the measured 6");

  const auto* ac = find_row(rep, "ac-theorem");
  REQUIRE(ac != nullptr);
  CHECK(ac->classification == Classification::PaperSlip);
  CHECK(ac->detail ==
        "spectra agree but the tabulated energy 30 differs from the measured 6");

  CHECK(find_row(rep, "quotient-elementary-abelian")->classification ==
        Classification::Match);
  CHECK(find_row(rep, "four-centralizer")->classification ==
        Classification::Match);
  CHECK(find_row(rep, "p-plus-two-centralizer")->classification ==
        Classification::Match);
  CHECK_FALSE(rep.any_fail());

  SECTION("without the slip table the classification stands, unflagged") {
    VerifyOptions bare;
    VerificationReport rep2 = verify_spec(parse_spec("Q(8)"), bare);
    const auto* fam2 = find_row(rep2, "dicyclic-family");
    REQUIRE(fam2 != nullptr);
    CHECK(fam2->classification == Classification::PaperSlip);
    CHECK_FALSE(fam2->expected_slip);
    CHECK_FALSE(rep2.any_fail());
  }
}

TEST_CASE("an impossible printed multiplicity is a spectrum slip", "[verify]") {
  VerificationReport rep =
      verify_spec(parse_spec("PQ(3,7)"), options_with_slips());
  CHECK(rep.vertex_count == 20);
  CHECK(rep.oracle_spectrum == Spectrum::exact({{-1, 12}, {1, 7}, {5, 1}}));
  CHECK(*rep.oracle_energy_exact == 24);
  REQUIRE(rep.rows.size() == 2);

  const auto* fam = find_row(rep, "pq-family");
  REQUIRE(fam != nullptr);
  CHECK(fam->classification == Classification::PaperSlip);
  CHECK(fam->expected_slip);
  CHECK(fam->detail ==
        "tabulated -1 multiplicity 13 cannot fit the 20-vertex graph "
        "(multiplicities sum to 21); measured multiplicity is 12");

  const auto* ac = find_row(rep, "ac-theorem");
  REQUIRE(ac != nullptr);
  CHECK(ac->classification == Classification::PaperSlip);
  CHECK_FALSE(rep.any_fail());
}

TEST_CASE("admissible-set claims match when the measurement is a member",
          "[verify]") {
  VerificationReport rep = verify_spec(parse_spec("U6(2)"), options_with_slips());
  const auto* five = find_row(rep, "five-centralizer");
  REQUIRE(five != nullptr);
  CHECK(five->classification == Classification::Match);
  CHECK(five->detail == "measured energy is admissible");
}

TEST_CASE("claims that genuinely contradict the graph fail", "[verify]") {
  VerificationReport rep = verify_spec(parse_spec("D(8)"), options_with_slips());
  SlipCatalog empty;

  SECTION("wrong energy with no spectrum beside it") {
    Prediction p;
    p.source = "synthetic";
    p.energy_printed = 5;
    PredictionOutcome out = detail::classify(p, rep, empty);
    CHECK(out.classification == Classification::Fail);
    CHECK(out.detail == "tabulated energy 5 differs from the measured 6");
  }
  SECTION("wrong spectrum") {
    Prediction p;
    p.source = "synthetic";
    p.spectrum = Spectrum::exact({{-1, 4}, {2, 2}});
    PredictionOutcome out = detail::classify(p, rep, empty);
    CHECK(out.classification == Classification::Fail);
    CHECK(out.detail ==
          "tabulated spectrum (-1)^4 (2)^2 differs from measured (-1)^3 (1)^3");
  }
  SECTION("energy outside the admissible set") {
    Prediction p;
    p.source = "synthetic";
    p.admissible_energies = {5, 7};
    PredictionOutcome out = detail::classify(p, rep, empty);
    CHECK(out.classification == Classification::Fail);
    CHECK(out.detail == "measured energy is not among the admissible values");
  }
  SECTION("no oracle means not applicable") {
    VerificationReport blind = rep;
    blind.oracle_available = false;
    Prediction p;
    p.source = "synthetic";
    p.energy_printed = 6;
    PredictionOutcome out = detail::classify(p, blind, empty);
    CHECK(out.classification == Classification::NotApplicable);
  }
}

TEST_CASE("report JSON is byte-identical across runs", "[verify]") {
  VerifyOptions opt = options_with_slips();
  std::string a = report_to_json(verify_spec(parse_spec("Q(8)"), opt)).dump(2);
  std::string b = report_to_json(verify_spec(parse_spec("Q(8)"), opt)).dump(2);
  CHECK(a == b);
  CHECK(a.find("elapsed") == std::string::npos);
}

TEST_CASE("report CSV carries one line per claim under a fixed header",
          "[verify]") {
  VerificationReport rep = verify_spec(parse_spec("Q(8)"), options_with_slips());
  std::string csv = reports_to_csv({rep});
  CHECK(csv.rfind("spec,group,order,source,classification,expected_slip,"
                  "energy_printed,energy_measured,spectrum_printed,"
                  "spectrum_measured,detail\n",
                  0) == 0);
  CHECK(csv.find("Q(8),Q_8,8,dicyclic-family,PAPER_SLIP,true,9,6,"
                 "(-1)^3 (1)^3,(-1)^3 (1)^3,") != std::string::npos);
  CHECK(csv.find("Q(8),Q_8,8,four-centralizer,MATCH,false,6,6,,") !=
        std::string::npos);
}

TEST_CASE("the report table marks expected slips", "[verify]") {
  VerificationReport rep = verify_spec(parse_spec("Q(8)"), options_with_slips());
  std::string table = report_to_table(rep, true);
  CHECK(table.find("PAPER_SLIP (expected)") != std::string::npos);
  CHECK(table.find("dicyclic-family") != std::string::npos);
}

TEST_CASE("the full catalog verifies with no failures, deterministically",
          "[verify][catalog]") {
  VerifyOptions opt = options_with_slips();
  std::vector<VerificationReport> reports = verify_catalog(opt, 8);
  std::vector<FamilySpec> specs = formula_catalog();
  REQUIRE(reports.size() == specs.size());
  REQUIRE(reports.size() == 89);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].spec_text == render(specs[i]));
  }

  nlohmann::ordered_json j = catalog_to_json(reports);
  CHECK(j["summary"]["specs"] == 89);
  CHECK(j["summary"]["rows"] == 299);
  CHECK(j["summary"]["MATCH"] == 196);
  CHECK(j["summary"]["PAPER_SLIP"] == 103);
  CHECK(j["summary"]["FAIL"] == 0);
  CHECK(j["summary"]["NOT_APPLICABLE"] == 0);

  std::string again = catalog_to_json(verify_catalog(opt, 3)).dump();
  CHECK(j.dump() == again);
}

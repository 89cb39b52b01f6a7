#include <doctest.h>

#include "cli.hpp"
#include "contractad/family_series.hpp"
#include "contractad/hilbert.hpp"

#include <sstream>

using namespace contractad;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("graph sources") {
  CHECK(cli::parse_family_spec("K4") == complete_graph(4));
  CHECK(cli::parse_family_spec("P7") == path_graph(7));
  CHECK(cli::parse_family_spec("C6") == cycle_graph(6));
  CHECK(cli::parse_family_spec("St5").n() == 6);
  CHECK(cli::parse_family_spec("K[1,2,2]") == complete_multipartite({2, 2, 1}));
  CHECK_THROWS_AS(cli::parse_family_spec("Q3"), std::invalid_argument);
  CHECK(cli::parse_edge_list("0-1, 1-2,2-3") == path_graph(4));
  CHECK_THROWS_AS(cli::parse_edge_list("0-0"), std::invalid_argument);
  CHECK(cli::parse_graph_file_content("n=3\n0 1\n1 2\n") == path_graph(3));
  CHECK(cli::parse_graph_file_content(to_graph6(cycle_graph(5)) + "\n") == cycle_graph(5));
}

TEST_CASE("computation commands") {
  Result r = run({"hilbert", "--target", "complex", "--graph", "K4"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 5*q + q^2\n");
  CHECK(run({"mobius", "--graph", "C5"}).out == "4\n");
  CHECK(run({"chromatic", "--edges", "0-1,1-2,0-2"}).out == run({"chromatic", "--graph", "K3"}).out);
  CHECK(run({"mobius", "--graph6", to_graph6(complete_graph(4))}).out == "-6\n");
  CHECK(run({"series", "--family", "path", "--order", "4"}).code == 0);
  CHECK(run({"young", "--target", "real", "--degree", "3"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"hilbert", "--target", "complex"}).code == 2);
  CHECK(run({"hilbert", "--target", "nope", "--graph", "K3"}).code == 2);
  CHECK(run({"mobius", "--graph", "K3", "--edges", "0-1"}).code == 2);
  CHECK(run({"mobius", "--edges", "0-1,2-3"}).code == 2);  // disconnected
  CHECK(run({"series", "--family", "path", "--order", "0"}).code == 2);
  CHECK(run({"series", "--family", "star", "--target", "gerst", "--closed-form"}).code == 2);
  CHECK(!run({"mobius"}).err.empty());
}

TEST_CASE("verify suites") {
  Result r = run({"verify", "--suite", "koszul", "--max-vertices", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS koszul n=4") != std::string::npos);
  CHECK(run({"verify", "--suite", "chromatic", "--max-vertices", "4"}).code == 0);
  CHECK(run({"verify", "--suite", "oracle", "--max-vertices", "4"}).code == 0);
  CHECK(run({"verify", "--suite", "composition", "--max-vertices", "5"}).code == 0);
  json j = json::parse(run({"--json", "verify", "--suite", "koszul", "--max-vertices", "3"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["checked"].size() == 4);
}

TEST_CASE("JSON round trip") {
  const QPoly q = QPoly::q();
  QPoly big = QPoly(Rational(Integer("123456789012345678901234567891")) / Rational(7)) * q.pow(3) -
              QPoly::monomial(Rational(1, 2), 3);
  CHECK(cli::qpoly_from_json(json::parse(cli::to_json(big).dump())) == big);
  CHECK(cli::qpoly_from_json(cli::to_json(QPoly())) == QPoly());

  PowerSeries s = family_series(wonderful_real_hilbert(), FamilyTag::K, 6).series;
  CHECK(cli::series_from_json(json::parse(cli::to_json(s).dump())) == s);

  YoungSeries y = young_of_graphic(wonderful_complex_hilbert(), 4);
  CHECK(cli::young_from_json(json::parse(cli::to_json(y).dump())) == y);

  json h = json::parse(run({"--json", "hilbert", "--target", "complex", "--graph", "K4"}).out);
  CHECK(cli::qpoly_from_json(h["value"]) == QPoly(1) + 5 * q + q * q);
  json ser = json::parse(run({"--json", "series", "--family", "complete", "--order", "5", "--closed-form"}).out);
  CHECK(cli::series_from_json(ser) == closed_form(Target::complex, FamilyTag::K, 5));
  json yj = json::parse(run({"--json", "young", "--target", "chromatic", "--degree", "4", "--closed-form"}).out);
  CHECK(cli::young_from_json(yj) == young_of_graphic(chromatic_gf(), 4));
}

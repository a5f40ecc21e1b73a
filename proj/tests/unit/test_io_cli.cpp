#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lineops/catalog.hpp"
#include "lineops/cli.hpp"
#include "lineops/io.hpp"

using namespace lineops;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("export then import is set-equal for every catalog entry") {
  for (auto& e : catalog_entries()) {
    if (e.heavy) continue;
    CAPTURE(e.name);
    auto L = build(e.name).arrangement;
    auto text = to_json(L).dump();
    auto d = read_document_text(text);
    CHECK(d.arrangement() == L);
    CHECK(d.field == L.field());
  }
}

TEST_CASE("integer coefficients and duplicates") {
  auto d = read_document_text(R"({"field": "Q", "lines": [[1, 0, 0], [2, 0, 0], ["0", "1/2", 0]]})");
  CHECK(d.lines.size() == 2);
  CHECK(d.duplicates_dropped == 1);
  auto p = read_document_text(R"J({"field": "GF(5)", "points": [[1, 2, 3]]})J");
  CHECK(p.is_points);
  CHECK(p.point_config().size() == 1);
  CHECK_THROWS_AS(p.arrangement(), Error);
}

TEST_CASE("malformed documents") {
  for (const char* bad : {"[", "[]", R"({"lines": [[1, 0]]})", R"({"lines": [], "points": []})",
                          R"({"field": "Q[x", "lines": []})", R"({"lines": [[0, 0, 0]]})", R"({"lines": [[1.5, 0, 0]]})"})
    CHECK_THROWS_AS(read_document_text(bad), Error);
}

TEST_CASE("matroid JSON round trip") {
  auto m = extract_matroid(catalog::finite_plane(2).arrangement);
  CHECK(matroid_from_json(matroid_json(m)) == m);
}

TEST_CASE("cli: exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"apply"}).code == 2);
  auto r = cli({"apply", "--op", "L{2"}, R"({"lines": [[1,0,0]]})");
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: parse: ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(cli({"catalog", "build", "nope"}).code == 1);
  CHECK(cli({"catalog", "build", "ceva", "--m", "3"}).code == 1);
  CHECK(cli({"profile", "--n", "3"}, "").code == 2);
  CHECK(cli({"catalog", "list"}).code == 0);
}

TEST_CASE("cli: catalog build pipes into apply and profile") {
  auto b = cli({"catalog", "build", "dual-hesse"});
  REQUIRE(b.code == 0);
  auto a = cli({"apply", "--op", "L{>=3;>=3}"}, b.out);
  REQUIRE(a.code == 0);
  // apply output is valid apply input
  auto a2 = cli({"apply", "--op", "L{>=3;>=3}"}, a.out);
  REQUIRE(a2.code == 0);
  CHECK(a2.out == a.out);
  auto p = cli({"profile"}, a.out);
  CHECK(p.out.find("lines 9") != std::string::npos);
  CHECK(p.out.find("t3=12") != std::string::npos);
}

TEST_CASE("cli: catalog parameters") {
  auto r = cli({"catalog", "build", "gv13", "--a", "2", "--sign", "-"});
  REQUIRE(r.code == 0);
  auto a = cli({"apply", "--op", "L{3;2}"}, r.out);
  CHECK(read_document_text(a.out).lines.size() == 30);
  auto g = cli({"catalog", "build", "generic", "--n", "5", "--seed", "9"});
  CHECK(Json::parse(g.out)["params"]["seed"] == "9");
  CHECK(cli({"apply", "--catalog", "ceva", "-p", "n=4", "--op", "L{>=4}"}).code == 0);
}

TEST_CASE("cli: seq table and JSON") {
  auto t = cli({"seq", "--catalog", "complete-quadrilateral", "--op", "L{>=2;>=2}", "--steps", "2"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("-239/97") != std::string::npos);
  auto j = cli({"seq", "--catalog", "dual-hesse", "--op", "L{>=3}", "--json"});
  auto js = Json::parse(j.out);
  CHECK(js["verdict"]["kind"] == "fixed");
  CHECK(js["steps"][0]["t"]["3"] == 12);
}

TEST_CASE("cli: check, equiv, matroid, conics, render, export") {
  auto c = cli({"check", "--catalog", "hesse", "--json"});
  REQUIRE(c.code == 0);
  CHECK(Json::parse(c.out)["freeness_roots"] == Json::array({4, 7}));

  auto cq = cli({"catalog", "build", "complete-quadrilateral"}).out;
  auto mx = cli({"matroid", "extract"}, cq);
  REQUIRE(mx.code == 0);
  CHECK(Json::parse(mx.out)["flats"].size() == 4);

  auto con = cli({"conics", "--catalog", "hexagon-on-conic", "--min", "6", "--of", "singular", "--irreducible", "--json"});
  REQUIRE(con.code == 0);

  auto svg = cli({"render", "--catalog", "grid6"});
  REQUIRE(svg.code == 0);
  CHECK(svg.out.find("</svg>") != std::string::npos);
  CHECK(svg.err.find("segments 6") != std::string::npos);
  CHECK(cli({"render", "--catalog", "finite-plane"}).code == 1);

  auto ex = cli({"export", "--catalog", "ceva", "--format", "text"});
  CHECK(ex.out.rfind("# field Q[x]/(x^2+x+1)", 0) == 0);
  auto im = cli({"import"}, cq);
  CHECK(read_document_text(im.out).arrangement() == read_document_text(cq).arrangement());
}

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {
struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(QUIVERPIC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json cli_json(const std::string& args) {
  const Run r = cli(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}
}  // namespace

TEST_CASE("homology command") {
  const Json j = cli_json("homology --n 5 --eps \"+-+-\"");
  CHECK(j["betti"] == Json::array({1, 5, 9, 5, 0, 0}));
  const Json s = cli_json("homology --eps \"+-+-\" --method snf");
  CHECK(s["betti"] == j["betti"]);
  CHECK(s["torsion"] == Json::array({Json::array(), Json::array(), Json::array(), Json::array(), Json::array(), Json::array()}));
  CHECK(cli_json("homology --eps LRLR")["eps"] == "+-+-");
}

TEST_CASE("decompose command") {
  const Json j = cli_json("decompose --eps \"+--+++\" --weight 1,2,3,3,2,1,2");
  CHECK(j["generic"] == Json::array({"x_0_5", "x_1_4", "x_2_7", "x_6_7"}));
  CHECK(j["admissible"] == false);
  const Json c = cli_json("decompose --eps \"+--+++\" --weight 1,2,3,3,2,1,1 --cut 3,6");
  CHECK(c["cell"] == Json::array({"x_0_5", "x_1_4", "x_2_3", "x_3_6", "x_6_7"}));
  CHECK(c["cut_set_of_cell"] == Json::array({3, 6}));
  CHECK(cli("decompose --eps \"+--+++\" --weight 1,2,3,3,2,1,1 --cut 2").code == 2);
}

TEST_CASE("ring command") {
  const Json j = cli_json("ring --n 3 --degree 2");
  REQUIRE(j["degrees"].size() == 1);
  CHECK(j["degrees"][0]["rank"] == 2);
  CHECK(j["degrees"][0]["basis"].size() == 2);
  const Json all = cli_json("ring --n 3");
  CHECK(all.contains("products"));
}

TEST_CASE("other commands") {
  const Json roots = cli_json("roots --n 3");
  CHECK(roots["roots"].size() == 6);
  const Json cells = cli_json("cells --eps +");
  CHECK(cells["counts"] == Json::array({1, 3, 1}));
  CHECK(cli_json("cells --eps + --degree 2")["cells"].size() == 1);
  const Json w = cli_json("weights --n 5 --degree 3");
  CHECK(w["basic_weights"][0]["count"] == 5);
  CHECK(cli_json("weights --n 7 --weight 1,2,3,3,2,1,1")["weight"]["resolution_set"] == Json::array({3, 6}));
  const Json p = cli_json("presentation --n 3 --output json");
  CHECK(p["relators"].size() == 6);
  CHECK(p["abelianization"]["rank"] == 3);
  const Run gap = cli("presentation --eps +");
  CHECK(gap.code == 0);
  CHECK(gap.out.rfind("# quiverpic presentation\n", 0) == 0);
  const Json cx = cli_json("complex --eps +");
  CHECK(cx["boundaries"].size() >= 1);
  const Run svg = cli("picture --n 3");
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  const Run verify = cli("verify --n 3");
  CHECK(verify.code == 0);
  CHECK(Json::parse(verify.out)["pass"] == true);
  const Run table = cli("homology --n 3 --output table");
  CHECK(table.code == 0);
  CHECK_FALSE(table.out.empty());
}

TEST_CASE("sweeps") {
  const Json h = cli_json("homology --n 4 --eps all");
  CHECK(h["orientations"].size() == 8);
  CHECK(h["consistent"] == true);
  CHECK(h["invariant"] == Json::array({1, 4, 5, 0, 0}));
  const Json c = cli_json("cells --n 2 --eps all");
  CHECK(c["orientations"].size() == 2);
  CHECK(cli_json("ring --n 4 --eps all")["consistent"] == true);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("homology --eps +x").code == 2);
  CHECK(cli("homology --n 4 --eps ++").code == 2);
  CHECK(cli("homology --n 0").code == 2);
  CHECK(cli("homology --n 13").code == 2);
  CHECK(cli("picture --n 4").code == 2);
  CHECK(cli("homology --n 3 --output svg").code == 2);
  CHECK(cli("homology --n 3 --method nope").code == 2);
  CHECK(cli("weights --n 3 --weight 1,a").code == 2);
  CHECK(cli("homology --n 3 --output xml").code == 2);
}

TEST_CASE("outputs are deterministic") {
  for (const char* args : {"homology --eps +-+ --method snf", "picture --eps -+", "ring --n 5", "complex --eps +-",
                           "homology --n 4 --eps all", "presentation --eps -+- --group u"}) {
    const Run a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(cli("homology --n 5 --eps all --threads 1").out == cli("homology --n 5 --eps all --threads 4").out);
}

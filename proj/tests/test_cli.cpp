#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bsc/cli.hpp"
#include "bsc/io.hpp"

using namespace bsc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
    const auto dir = fs::temp_directory_path() / "bsc_cli_test";
    fs::create_directories(dir);
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("spectrum of C4") {
    const auto g = scratch("c4.txt", write_graph(graphs::cycle(4)));
    const auto r = run({"spectrum", "--graph", g});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const std::vector<double> want{2, 0, 0, -2};
    for (std::size_t i = 0; i < 4; ++i) CHECK(j["eigenvalues"][i].get<double>() == doctest::Approx(want[i]));
    CHECK(j["mu_star"].get<double>() == doctest::Approx(2));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"spectrum", "--graph", "x", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"spectrum", "--graph", "/no/such/file"}).code == 2);
    CHECK(run({"montecarlo", "--group", "sym:3", "--k", "3", "--eps", "0.5", "--trials", "5"}).code == 2);
    CHECK(run({"montecarlo", "--group", "sym:3", "--k", "3", "--eps", "1.5", "--trials", "5", "--seed", "1"}).code == 2);
    CHECK(run({"verify-magnifier", "--graph", "x", "--mode", "sampled"}).code == 2);
}

TEST_CASE("Golay design report") {
    const auto r = run({"design", "--golay", "--validate"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["b"] == 759);
    CHECK(j["validation"]["ok"] == true);
    CHECK(j["weight_distribution"]["12"] == 2576);
}

TEST_CASE("tuple mismatches exit 1") {
    const auto r = run({"design", "--mathieu12", "--level", "9", "--check-tuple", "9,36,8,3,1"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["tuple_check"]["identities_hold"] == false);
    CHECK(run({"design", "--mathieu12", "--level", "9", "--check-tuple", "9,12,4,3,1"}).code == 0);
}

TEST_CASE("false verdicts exit 1") {
    const auto g = scratch("gq.txt", write_graph(gq22_incidence()));
    CHECK(run({"verify-bsc", "--graph", g, "--alpha", "1", "--c", "1"}).code == 0);
    CHECK(run({"verify-bsc", "--graph", g, "--alpha", "1", "--c", "3"}).code == 1);
    CHECK(run({"verify-expander", "--graph", g, "--c", "0.5"}).code == 0);
    const auto c8 = scratch("c8.txt", write_graph(graphs::cycle(8)));
    CHECK(run({"verify-magnifier", "--graph", c8, "--c", "0.6"}).code == 1);
    CHECK(run({"lemma11", "--graph", c8}).code == 0);
}

TEST_CASE("constructed graphs re-ingest identically") {
    const auto s = scratch("s4.txt", "degree 4\n(0 1)\n(0 1 2 3)\n");
    const auto l = scratch("l4.txt", "degree 4\n(0 1)\n");
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"construct", "--kind", "cayley", "--group", "sym:4", "--S", s},
          {"construct", "--kind", "coset", "--group", "sym:4", "--L", l, "--S", s},
          {"construct", "--kind", "bicoset", "--group", "sym:4", "--L", l, "--N", "alt:4", "--S", s},
          {"construct", "--kind", "gq22"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        const auto path = scratch("built.txt", r.out);
        const auto back = read_graph(path);
        std::visit([&](const auto& g) { CHECK(write_graph(g) == r.out); }, back);
    }
    const auto design = run({"design", "--mathieu12", "--level", "10", "--emit", scratch("d10.txt", "")});
    CHECK(design.code == 0);
    const auto d10 = read_design((fs::temp_directory_path() / "bsc_cli_test" / "d10.txt").string());
    CHECK(d10.blocks.size() == 30);
}

TEST_CASE("identical flags give identical bytes") {
    const auto l = scratch("l3.txt", "degree 3\n(0 1)\n");
    const std::vector<std::string> mc{"montecarlo", "--group", "sym:3", "--L", l, "--N", "alt:3", "--k", "6",
                                      "--eps", "0.4", "--trials", "100", "--seed", "9", "--variant", "thm18"};
    CHECK(run(mc).out == run(mc).out);
    const auto g = scratch("gq2.txt", write_graph(gq22_incidence()));
    const std::vector<std::string> sampled{"verify-bsc", "--graph", g, "--alpha", "0.5", "--c", "1",
                                           "--mode", "sampled", "--seed", "4", "--budget", "50"};
    CHECK(run(sampled).out == run(sampled).out);
}

TEST_CASE("pipeline on S4") {
    const auto s = scratch("ps.txt", "degree 4\n(0 1)\n(0 1 2 3)\n");
    const auto l = scratch("pl.txt", "degree 4\n(0 1)\n");
    const auto r = run({"pipeline63", "--group", "sym:4", "--L", l, "--S", s});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["lambda1"].get<double>() > j["lambda2"].get<double>());
    CHECK(j["warnings"].empty());

    const auto e = scratch("pe.txt", "degree 4\n()\n");
    const auto bad = run({"pipeline63", "--group", "sym:4", "--L", l, "--S", e});
    CHECK(bad.code == 1);
    const auto jb = nlohmann::json::parse(bad.out);
    CHECK(jb["s_generates"] == false);
    CHECK(jb["warnings"].size() >= 1);

    const auto trivial = scratch("pt.txt", "degree 4\n()\n");
    const auto bicayley = run({"pipeline63", "--group", "sym:4", "--L", trivial, "--S", s});
    const auto jt = nlohmann::json::parse(bicayley.out);
    CHECK(jt["inputs"] == 24);
    CHECK(jt["s_prime_size"] == 3);
}

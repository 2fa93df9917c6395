#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "qrep/format.hpp"
#include "qrep_cli.hpp"

using namespace qrep;

namespace {

const Rationals QQ;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QREP_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("qrep_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

} // namespace

TEST(Cli, ValidateGoldens) {
    for (const char* name : {"birep_hom.qrep", "birep_connectors.qrep"}) {
        auto r = run({"validate", data(name)});
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_TRUE(contains(r.out, "valid"));
    }
}

TEST(Cli, ValidateRejectsCyclicQuiver) {
    auto path = temp_file("cyclic.qrep", "field QQ\nquiver C { vertices: 1 2; arrows: a: 1 -> 2, b: 2 -> 1; }\n");
    auto r = run({"validate", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "acyclic no"));
}

TEST(Cli, HomDimensions) {
    auto r = run({"hom", data("birep_hom.qrep"), "--from", "Vbar", "--to", "Wbar"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "dim = 1"));
    EXPECT_TRUE(contains(run({"hom", data("birep_hom.qrep"), "--from", "V", "--to", "W"}).out, "dim = 2"));
    EXPECT_TRUE(contains(run({"hom", data("birep_hom.qrep"), "--from", "Vp", "--to", "Wp"}).out, "dim = 1"));
}

TEST(Cli, HomErrors) {
    auto missing = run({"hom", data("birep_hom.qrep"), "--from", "Nope", "--to", "Wbar"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_TRUE(missing.out.empty());
    EXPECT_FALSE(missing.err.empty());
    // A rep and a birep live on different quiver tuples.
    EXPECT_EQ(run({"hom", data("birep_hom.qrep"), "--from", "V", "--to", "Wbar"}).code, 1);
    EXPECT_EQ(run({"hom", data("birep_hom.qrep"), "--from", "V", "--to", "Wp"}).code, 1);
}

TEST(Cli, KernelAndCokernelEmitParseableDocuments) {
    auto k = run({"ker", data("birep_hom.qrep"), "--morphism", "g"});
    ASSERT_EQ(k.code, 0) << k.err;
    auto kd = std::get<Document<Rationals>>(parse(k.out));
    ASSERT_NE(kd.find_nrep("ker_g"), nullptr);
    EXPECT_NE(kd.find_morphism("ker_g_incl"), nullptr);
    // g is nonzero only on the one-dimensional source vertex of the line.
    EXPECT_EQ(kd.find_nrep("ker_g")->nrep.total_dim(), fixtures::vbar(QQ).total_dim() - 1);

    auto c = run({"coker", data("birep_hom.qrep"), "--morphism", "h"});
    ASSERT_EQ(c.code, 0) << c.err;
    auto cd = std::get<Document<Rationals>>(parse(c.out));
    ASSERT_NE(cd.find_rep("coker_h"), nullptr);
    EXPECT_NE(cd.find_morphism("coker_h_proj"), nullptr);

    EXPECT_EQ(run({"ker", data("birep_hom.qrep"), "--morphism", "missing"}).code, 2);
}

TEST(Cli, Canon) {
    auto r = run({"canon", data("birep_hom.qrep"), "--morphism", "g"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "verified: true"));
}

TEST(Cli, DirsumAppendsSumAndStructureMaps) {
    auto r = run({"dirsum", data("birep_hom.qrep"), "--of", "Vbar,Wbar", "--out", "S"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = std::get<Document<Rationals>>(parse(r.out));
    ASSERT_NE(d.find_nrep("S"), nullptr);
    EXPECT_EQ(d.find_nrep("S")->nrep, direct_sum(fixtures::vbar(QQ), fixtures::wbar(QQ)).sum);
    for (const char* m : {"S_i1", "S_i2", "S_p1", "S_p2"}) EXPECT_NE(d.find_morphism(m), nullptr) << m;

    EXPECT_EQ(run({"dirsum", data("birep_hom.qrep"), "--of", "Vbar", "--out", "S"}).code, 2);
    EXPECT_EQ(run({"dirsum", data("birep_hom.qrep"), "--of", "Vbar,Wbar", "--out", "Vbar"}).code, 2);
}

TEST(Cli, Indec) {
    auto w = run({"indec", data("birep_hom.qrep"), "--object", "Wbar"});
    EXPECT_EQ(w.code, 0) << w.err;
    EXPECT_TRUE(contains(w.out, "Decomposable"));
    EXPECT_TRUE(contains(w.out, "witness verified: yes"));
    auto v = run({"indec", data("birep_hom.qrep"), "--object", "Vbar"});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_TRUE(contains(v.out, "Indecomposable"));
}

TEST(Cli, AxiomsExitCodes) {
    auto r = run({"axioms", "--trials", "5"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "rank_nullity: PASS"));
    auto one = run({"axioms", "--trials", "3", "--law", "kernel_universal", "--field", "QQ"});
    EXPECT_EQ(one.code, 0);
    EXPECT_FALSE(contains(one.out, "rank_nullity"));
    EXPECT_EQ(run({"axioms", "--law", "nonsense"}).code, 2);
    EXPECT_EQ(run({"axioms", "--field", "GF(4)"}).code, 2);
    EXPECT_EQ(run({"axioms", "--trials", "0"}).code, 2);
}

TEST(Cli, AxiomsJson) {
    auto r = run({"axioms", "--trials", "4", "--seed", "7", "--json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["field"], "GF(5)");
    EXPECT_EQ(j["passed"], true);
    ASSERT_EQ(j["laws"].size(), 9u);
    EXPECT_EQ(j["laws"][0]["trials"], 4);
    EXPECT_EQ(j["laws"][0]["seed"], 7);
}

TEST(Cli, UsageAndParseErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"hom", data("birep_hom.qrep")}).code, 2);
    EXPECT_EQ(run({"validate", "/nonexistent/file.qrep"}).code, 2);
    auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_TRUE(contains(help.out, "axioms"));

    auto path = temp_file("broken.qrep", "field QQ\nquiver Q { vertices: 1 2; arrows: a: 1 -> 3; }\n");
    auto r = run({"validate", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_TRUE(contains(r.err, path + ":2:"));
    EXPECT_TRUE(contains(r.err, "DanglingEndpoint"));
}

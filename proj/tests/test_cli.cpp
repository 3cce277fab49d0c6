#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(XN77_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("help and argument errors") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("").exit_code == 2);                       // a subcommand is required
    CHECK(run("search").exit_code == 2);                 // --y-max is required
    CHECK(run("--format yaml search --y-max 5").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--threads 0 search --y-max 5").exit_code == 2);
}

TEST_CASE("search emits the published table as json") {
    auto r = run("--format json search --alpha-max 2 --beta-max 2 --y-max 100 --n-min 3 "
                 "--n-max 5");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "search");
    CHECK(doc["completeness_claim"] == "CompleteWithinBounds");
    CHECK(doc["params"]["y_max"] == 100);
    REQUIRE(doc["results"].is_array());
    CHECK(doc["results"].size() == 14);
    bool found = false;
    for (const auto& s : doc["results"])
        if (s["x"] == "797" && s["y"] == "86" && s["alpha"] == 1 && s["beta"] == 2 && s["n"] == 3)
            found = true;
    CHECK(found);

    auto exc = run("--format json search --alpha-max 2 --beta-max 2 --y-max 100 --n-min 3 "
                   "--n-max 5 --exceptional-only");
    REQUIRE(exc.exit_code == 0);
    CHECK(json::parse(exc.out)["results"].size() == 8);
}

TEST_CASE("json output round-trips byte for byte") {
    for (const char* args : {
             "--format json search --alpha-max 1 --beta-max 1 --y-max 50 --n-min 3 --n-max 4",
             "--format json verify --fixtures theorem1",
             "--format json lucas terms --u 1 --v 1 --d 7 --count 14",
             "--format json lucas rank --u 2 --v 4 --d 1 --q 11",
             "--format json lucas primdiv --u 1 --v 1 --d 11 --n 5",
             "--format json n4 --alpha 5 --beta 2",
             "--format json mordell --alpha1 3 --beta1 0 --y-bound 10",
             "--format json case --n 5 --alpha odd --beta even",
         }) {
        auto r = run(args);
        REQUIRE(r.exit_code == 0);
        json doc = json::parse(r.out);
        CHECK(doc.dump(2) + "\n" == r.out);
        CHECK(doc["schema_version"] == "1");
    }
}

TEST_CASE("verify: fixtures pass, a wrong tuple fails, a partial tuple is an error") {
    CHECK(run("verify --fixtures theorem1").exit_code == 0);
    CHECK(run("verify --fixtures theorem2").exit_code == 0);
    auto r = run("--format json verify --fixtures corollary");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"].size() == 24);
    for (const auto& row : doc["results"]) CHECK(row["ok"] == true);

    CHECK(run("verify --x 2 --y 3 --alpha 1 --beta 1 --n 4").exit_code == 0);
    auto bad = run("verify --x 2 --y 3 --alpha 1 --beta 1 --n 5", true);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(run("verify --x 2 --y 3").exit_code == 2);
    CHECK(run("verify --fixtures nonesuch").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
}

TEST_CASE("lucas subcommands") {
    auto terms = run("--format json lucas terms --u 1 --v 1 --d 7 --count 14");
    REQUIRE(terms.exit_code == 0);
    json doc = json::parse(terms.out);
    REQUIRE(doc["results"].size() == 14);
    CHECK(doc["results"][7]["value"] == "7");
    CHECK(doc["results"][13]["value"] == "-1");

    auto rank = run("--format json lucas rank --u 2 --v 4 --d 1 --q 11");
    doc = json::parse(rank.out);
    CHECK(doc["results"][0]["rank"] == 6);
    auto norank = run("--format json lucas rank --u 1 --v 1 --d 7 --q 2 --cap 30");
    doc = json::parse(norank.out);
    CHECK(doc["results"][0]["rank"].is_null());

    auto def = run("--format json lucas primdiv --u 1 --v 1 --d 11 --n 5");
    doc = json::parse(def.out);
    CHECK(doc["results"][0]["status"] == "defective");
    CHECK(doc["results"][0]["defective_match"]["y"] == 3);

    auto unk = run("--format json lucas primdiv --u 1 --v 1 --d 7 --n 5");
    doc = json::parse(unk.out);
    CHECK(doc["results"][0]["status"] == "unknown");
    CHECK(doc["results"][0]["defective_match"].is_null());

    auto prim = run("--format json lucas primdiv --u 1 --v 1 --d 7 --n 10");
    doc = json::parse(prim.out);
    CHECK(doc["results"][0]["status"] == "primitive");
    CHECK(doc["results"][0]["witness"] == "11");

    // mismatched parity for the ring
    CHECK(run("lucas terms --u 1 --v 2 --d 7").exit_code == 2);
    // budget too small to certify the factorization
    CHECK(run("lucas primdiv --u 1 --v 1 --d 7 --n 25 --trial-bound 10").exit_code == 2);
}

TEST_CASE("n4 and mordell subcommands") {
    auto r = run("--format json n4 --alpha 1 --beta 1");
    json doc = json::parse(r.out);
    CHECK(doc["completeness_claim"] == "CompletePerExponentPair");
    REQUIRE(doc["results"].size() == 1);
    CHECK(doc["results"][0]["x"] == "2");
    CHECK(doc["results"][0]["y"] == "3");

    CHECK(json::parse(run("--format json n4 --alpha 0 --beta 0").out)["results"].empty());

    auto m = run("--format json mordell --alpha1 3 --beta1 0 --y-bound 10");
    doc = json::parse(m.out);
    CHECK(doc["completeness_claim"] == "CompleteWithinBounds");
    REQUIRE(doc["results"].size() == 3);
    CHECK(doc["results"][0]["y_num"] == "7");
    CHECK(doc["results"][0]["x_num"] == "0");
    CHECK(run("mordell --alpha1 6 --beta1 0").exit_code == 2);
}

TEST_CASE("case transcripts over the four parity profiles") {
    auto r = run("--format json case --n 5 --alpha odd --beta even");
    json doc = json::parse(r.out);
    CHECK(doc["results"][0]["d"] == 7);
    CHECK(doc["results"][0]["verdict"] == "Exceptional");
    CHECK(doc["results"][0]["all_checked"] == true);

    r = run("--format json case --n 5 --alpha even --beta odd");
    doc = json::parse(r.out);
    CHECK(doc["results"][0]["d"] == 11);
    CHECK(doc["results"][0]["verdict"] == "NoSolution");

    r = run("--format json case --n 7 --alpha odd --beta odd");
    doc = json::parse(r.out);
    CHECK(doc["results"][0]["d"] == 77);
    CHECK(doc["results"][0]["verdict"] == "NoSolution");

    CHECK(run("case --n 6 --alpha odd --beta even").exit_code == 2);
    CHECK(run("case --n 5 --alpha sideways --beta even").exit_code == 2);
}

TEST_CASE("csv and table formats") {
    auto csv = run("--format csv search --alpha-max 1 --beta-max 1 --y-max 3 --n-min 4 "
                   "--n-max 4");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out == "x,y,alpha,beta,n\n3,2,1,0,4\n2,3,1,1,4\n");

    auto tab = run("search --alpha-max 1 --beta-max 1 --y-max 3 --n-min 4 --n-max 4");
    CHECK(tab.out.find("completeness: CompleteWithinBounds") != std::string::npos);
    CHECK(tab.out.find("3\t2") != std::string::npos);

    auto empty = run("search --y-max 3 --n-min 5 --n-max 5");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("no solutions") != std::string::npos);

    auto caseCsv = run("--format csv case --n 5 --alpha even --beta even");
    CHECK(caseCsv.exit_code == 0);
    CHECK(caseCsv.out.find("kind,checked,rule,detail") != std::string::npos);
    CHECK(caseCsv.out.find("Mod8Sieve,true,") != std::string::npos);
}

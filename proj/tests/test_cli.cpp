#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "banach/io.hpp"

using banach::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

RunResult cli(const std::string& args) {
    static int seq = 0;
    std::string o = "cli_out_" + std::to_string(seq) + ".txt";
    std::string e = "cli_err_" + std::to_string(seq) + ".txt";
    ++seq;
    std::string cmd =
        std::string(BANACH_CLI_PATH) + " " + args + " > " + o + " 2> " + e;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(o);
    r.err = slurp(e);
    std::remove(o.c_str());
    std::remove(e.c_str());
    return r;
}

struct CsvRow {
    std::size_t index;
    double unit_lo, unit_hi, product_lo, product_hi;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::stringstream ss(text);
    std::string line;
    std::getline(ss, line);  // header
    REQUIRE(line ==
            "index,unit_norm_lo,unit_norm_hi,product_norm_lo,"
            "product_norm_hi");
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        CsvRow r{};
        REQUIRE(std::sscanf(line.c_str(), "%zu,%lf,%lf,%lf,%lf", &r.index,
                            &r.unit_lo, &r.unit_hi, &r.product_lo,
                            &r.product_hi) == 5);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

TEST_CASE("classify reports an invertible grid function") {
    spit("one.json", R"({"algebra":"C","a":0.0,"b":1.0,
        "repr":{"kind":"grid","re":[1.0,1.0]}})");
    RunResult r = cli("classify --spec one.json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["classification"]["regular"]["status"] == "proved");
    CHECK(j["classification"]["singular"]["status"] == "refuted");
    CHECK(j["citations"].size() == 4);
    CHECK(j["element_spec"]["algebra"] == "C");
    CHECK(j["witnesses"].empty());

    RunResult again = cli("classify --spec one.json");
    CHECK(again.out == r.out);  // byte-identical reruns

    RunResult csv = cli("classify --spec one.json --format csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out.find("verdict,status\n") == 0);
    CHECK(csv.out.find("regular,proved") != std::string::npos);
}

TEST_CASE("classify distinguishes the degenerate kinds") {
    spit("seq_zero.json", R"({"algebra":"linf","prefix_re":[0.0],
        "tail":{"kind":"const","re":1.0}})");
    RunResult r = cli("classify --spec seq_zero.json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["classification"]["zero_divisor"]["status"] == "proved");
    CHECK(j["classification"]["topological_divisor"]["status"] == "proved");
    CHECK(j["classification"]["singular"]["status"] == "proved");
    CHECK(j["classification"]["regular"]["status"] == "refuted");

    spit("disk_blaschke.json", R"({"algebra":"disk","poly":{"re":[1.0]},
        "blaschke":{"zeros":[{"re":0.5}]}})");
    RunResult d = cli("classify --spec disk_blaschke.json");
    REQUIRE(d.code == 0);
    json dj = json::parse(d.out);
    CHECK(dj["classification"]["singular"]["status"] == "proved");
    CHECK(dj["classification"]["topological_divisor"]["status"] == "refuted");
}

TEST_CASE("polynomial enclosures touching zero exit with status 2") {
    spit("poly_x.json", R"({"algebra":"C","a":-1.0,"b":1.0,
        "repr":{"kind":"poly","coeffs_re":[0.0,1.0]}})");
    RunResult r = cli("classify --spec poly_x.json");
    REQUIRE(r.code == 2);
    json j = json::parse(r.out);
    CHECK(j["classification"]["regular"]["status"] == "unknown");
    CHECK(j["classification"]["zero_divisor"]["status"] == "refuted");
}

TEST_CASE("malformed input is reported on stderr with exit 1") {
    spit("bad_domain.json", R"({"algebra":"C","a":1.0,"b":0.0,
        "repr":{"kind":"grid","re":[1.0,1.0]}})");
    RunResult r = cli("classify --spec bad_domain.json");
    CHECK(r.code == 1);
    CHECK(r.err.find("a must be < b") != std::string::npos);

    RunResult missing = cli("classify --spec no_such_file_9q.json");
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot read spec file") != std::string::npos);

    spit("not_json.json", "{nope");
    RunResult nj = cli("classify --spec not_json.json");
    CHECK(nj.code == 1);
    CHECK(nj.err.find("is not valid JSON") != std::string::npos);
}

TEST_CASE("tdz witnesses stream as CSV with exact certificates") {
    spit("tent.json", R"({"algebra":"C","a":0.0,"b":1.0,
        "repr":{"kind":"grid","re":[0.5,0.0,0.5]}})");
    RunResult r = cli("witness --spec tent.json --kind tdz --indices 1..4");
    REQUIRE(r.code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(rows[k].index == k + 1);
        CHECK(rows[k].unit_lo == 1.0);
        CHECK(rows[k].unit_hi == 1.0);
        // the slope-1 tent against a width-1/n bump peaks at exactly 1/(4n)
        CHECK(rows[k].product_hi ==
              Catch::Approx(0.25 / double(k + 1)).margin(1e-15));
        if (k > 0) CHECK(rows[k].product_hi < rows[k - 1].product_hi);
    }
}

TEST_CASE("zero-divisor witnesses annihilate exactly") {
    spit("seq_zero2.json", R"({"algebra":"linf","prefix_re":[0.0],
        "tail":{"kind":"const","re":1.0}})");
    RunResult r =
        cli("witness --spec seq_zero2.json --kind zero-divisor "
            "--indices 1..3");
    REQUIRE(r.code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.unit_lo == 1.0);
        CHECK(row.product_hi == 0.0);
    }

    spit("run_zero.json", R"({"algebra":"C","a":0.0,"b":1.0,
        "repr":{"kind":"grid","re":[0.0,0.0,1.0]}})");
    RunResult g =
        cli("witness --spec run_zero.json --kind zero-divisor --indices 2");
    REQUIRE(g.code == 0);
    auto grows = parse_csv(g.out);
    REQUIRE(grows.size() == 1);
    CHECK(grows[0].unit_hi == 0.25);  // tent peak (d-c)/2 on the zero run
    CHECK(grows[0].product_hi == 0.0);

    RunResult jfmt =
        cli("witness --spec seq_zero2.json --kind zero-divisor --indices 2 "
            "--format json");
    REQUIRE(jfmt.code == 0);
    json j = json::parse(jfmt.out);
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0]["index"] == 2);
    CHECK(j["witnesses"][0]["product_norm_hi"] == 0.0);
    CHECK(j["classification"]["zero_divisor"]["status"] == "proved");
}

TEST_CASE("witness requests are refused when no witness exists") {
    spit("tent2.json", R"({"algebra":"C","a":0.0,"b":1.0,
        "repr":{"kind":"grid","re":[0.5,0.0,0.5]}})");
    RunResult r = cli("witness --spec tent2.json --kind zero-divisor");
    CHECK(r.code == 3);
    CHECK(r.err.find("refused:") == 0);
    CHECK(r.err.find("no open interval") != std::string::npos);

    spit("reg_seq.json",
         R"({"algebra":"linf","tail":{"kind":"const","re":2.0}})");
    RunResult t = cli("witness --spec reg_seq.json --kind tdz");
    CHECK(t.code == 3);
    CHECK(t.err.find("inf |x_n| > 0") != std::string::npos);

    RunResult bad = cli("witness --spec reg_seq.json --kind frobenius");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("--kind must be") != std::string::npos);

    RunResult ids =
        cli("witness --spec reg_seq.json --kind tdz --indices 5..2");
    CHECK(ids.code == 1);
    CHECK(ids.err.find("--indices expects") != std::string::npos);
}

TEST_CASE("verify runs named suites") {
    RunResult r = cli("verify linf");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("criterion 7") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    RunResult bad = cli("verify fourier");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("unknown suite") != std::string::npos);
}

TEST_CASE("config files feed defaults") {
    spit("disk_z.json", R"({"algebra":"disk","poly":{"re":[0.0,1.0]}})");
    spit("cfg.json", R"({"tol":1e-8,"samples":512})");
    RunResult r = cli("classify --spec disk_z.json --config cfg.json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["classification"]["singular"]["status"] == "proved");

    RunResult missing = cli("classify --spec disk_z.json --config nope_7z.json");
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot read spec file") != std::string::npos);
}

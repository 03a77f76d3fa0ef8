// End-to-end checks of the command line tool: spawns the built binary
// (path in ARCSHARE_BIN) inside a scratch directory and checks files,
// stdout JSON, and the exit code contract.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arcshare/serialize.hpp"

using namespace arcshare;
namespace fs = std::filesystem;

namespace {

std::string bin() {
    const char* b = std::getenv("ARCSHARE_BIN");
    REQUIRE_MESSAGE(b != nullptr, "ARCSHARE_BIN must point at the CLI binary");
    return b;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, const fs::path& dir) {
    fs::path out_file = dir / "stdout.txt";
    std::string cmd = "cd " + dir.string() + " && " + bin() + " " + args + " > " +
                      out_file.string() + " 2> " + (dir / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream os;
    os << in.rdbuf();
    return {WEXITSTATUS(rc), os.str()};
}

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("arcshare_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
};

} // namespace

TEST_CASE("threshold scheme, deal, reconstruct round trip") {
    Scratch s;
    CHECK(run("scheme threshold --q 5 --t 2 --n 3 -o shamir.json", s.dir).code == 0);
    CHECK(run("verify shamir.json --mode all", s.dir).code == 0);
    CHECK(run("deal shamir.json --secret 3 --seed 7 -o sh", s.dir).code == 0);

    RunResult rec = run("reconstruct shamir.json -s sh/share_p0.json -s sh/share_p2.json", s.dir);
    CHECK(rec.code == 0);
    CHECK(json::parse(rec.out).at("secret").get<int>() == 3);

    // a single share leaves the exact uniform ambiguity
    RunResult amb = run("reconstruct shamir.json -s sh/share_p1.json", s.dir);
    CHECK(amb.code == 0);
    json aj = json::parse(amb.out);
    CHECK(aj.at("matching_rules").get<int>() == 5);
    for (const auto& [key, count] : aj.at("key_counts").items())
        CHECK(count.get<int>() == 1);

    // the seed makes deals bit-reproducible
    CHECK(run("deal shamir.json --secret 3 --seed 7 -o sh2", s.dir).code == 0);
    CHECK(load_json_file((s.dir / "sh/share_p0.json").string()) ==
          load_json_file((s.dir / "sh2/share_p0.json").string()));

    // omitting the seed still works but warns about the fixed default
    CHECK(run("deal shamir.json --secret 0 -o sh3", s.dir).code == 0);
    CHECK(load_text_file((s.dir / "stderr.txt").string()).find("warning") != std::string::npos);

    // tampered share with three present: inconsistent, exit 4
    json bad = load_json_file((s.dir / "sh/share_p0.json").string());
    bad["value"] = (bad["value"].get<int>() + 1) % 5;
    save_json_file((s.dir / "sh/share_bad.json").string(), bad);
    RunResult r4 = run(
        "reconstruct shamir.json -s sh/share_bad.json -s sh/share_p1.json -s sh/share_p2.json",
        s.dir);
    CHECK(r4.code == 4);
}

TEST_CASE("construct, scheme files, and re-verification") {
    Scratch s;
    CHECK(run("construct parc --q 3 --variant 28 -o parc.json", s.dir).code == 0);
    CHECK(run("scheme from-parc parc.json -o pscheme.json", s.dir).code == 0);
    CHECK(run("verify pscheme.json --mode all", s.dir).code == 0);

    CHECK(run("construct harc --q 2 -o harc.json", s.dir).code == 0);
    CHECK(run("scheme from-harc harc.json -o hscheme.json", s.dir).code == 0);
    CHECK(run("verify hscheme.json --mode all", s.dir).code == 0);

    // every written file re-reads to the same verdict
    json pj = load_json_file((s.dir / "pscheme.json").string());
    CHECK(pj.at("verification").at("verdict") == "pass");
    Scheme reloaded = scheme_from_json(pj);
    CHECK(reloaded.report.verdict);

    // corrupt the dealer column: re-verification must fail with exit 3
    pj["dealer"] = std::vector<int>{0, 0, 1};
    save_json_file((s.dir / "broken.json").string(), pj);
    CHECK(run("verify broken.json --mode vector", s.dir).code == 3);
}

TEST_CASE("array export and array verification") {
    Scratch s;
    REQUIRE(run("scheme threshold --q 5 --t 2 --n 3 -o shamir.json", s.dir).code == 0);
    CHECK(run("export array shamir.json --format csv -o arr.csv", s.dir).code == 0);
    CHECK(run("export array shamir.json --format json -o arr.json", s.dir).code == 0);

    save_json_file((s.dir / "acc.json").string(), json{{"model", "threshold"}, {"t", 2}, {"n", 3}});
    CHECK(run("verify --array arr.csv --access acc.json --q 5 --mode definitional", s.dir).code == 0);
    CHECK(run("verify --array arr.json --access acc.json --mode all", s.dir).code == 0);

    // wrong access structure: the array cannot realize (3,3) -> exit 3
    save_json_file((s.dir / "acc33.json").string(), json{{"model", "threshold"}, {"t", 3}, {"n", 3}});
    CHECK(run("verify --array arr.json --access acc33.json --mode definitional", s.dir).code == 3);
}

TEST_CASE("bounds subcommand") {
    Scratch s;
    RunResult parc = run("bounds parc --q 2", s.dir);
    CHECK(parc.code == 0);
    CHECK(json::parse(parc.out).at("max_size").get<int>() == 4);

    RunResult harc = run("bounds harc --q 2", s.dir);
    CHECK(harc.code == 0);
    CHECK(json::parse(harc.out).at("max_total").get<int>() == 4);

    CHECK(run("bounds parc --q 7", s.dir).code == 2); // over the guard
}

TEST_CASE("usage errors exit with 2") {
    Scratch s;
    CHECK(run("scheme threshold --q 6 --t 2 --n 3", s.dir).code == 2);  // not a prime power
    CHECK(run("scheme threshold --q 5 --t 9 --n 3", s.dir).code == 2);  // bad threshold
    CHECK(run("verify missing.json", s.dir).code == 2);
    CHECK(run("construct parc --q 3 --variant 31", s.dir).code == 2);   // parity
    CHECK(run("nonsense", s.dir).code != 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <string>

#include "json.hpp"

// Exercises the installed binary end to end: exit codes 0 (all checks pass),
// 1 (a finding failed), 2 (invalid input), plus output shape.

#ifndef HOPFKERN_CLI
#error "HOPFKERN_CLI must point at the built binary"
#endif
#ifndef HOPFKERN_DATA
#error "HOPFKERN_DATA must point at the sample data directory"
#endif

struct RunResult {
    int exit_code = -1;
    std::string out;
};

static RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HOPFKERN_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

static std::string data(const std::string& name) {
    return std::string(HOPFKERN_DATA) + "/" + name;
}

TEST_CASE("verify accepts builtins and files") {
    CHECK(run_cli("verify --builtin S3").exit_code == 0);
    RunResult r = run_cli("verify " + data("s3.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("antipode_involutive") != std::string::npos);
    CHECK(run_cli("verify " + data("kp8.json")).exit_code == 0);
}

TEST_CASE("verify rejects a corrupted antipode with the axiom name") {
    RunResult r = run_cli("verify " + data("broken_antipode.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("antipode") != std::string::npos);
}

TEST_CASE("invalid inputs exit with code 2") {
    CHECK(run_cli("verify /nonexistent.json").exit_code == 2);
    CHECK(run_cli("verify --builtin NOPE").exit_code == 2);
    CHECK(run_cli("verify --builtin S3 --max-dim 4").exit_code == 2);
    CHECK(run_cli("irr --builtin S3 " + data("s3.json")).exit_code == 2); // both sources
    // C4 over the rationals: splitting needs the fourth roots of unity
    RunResult r = run_cli("irr " + data("c4_over_q.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("larger N") != std::string::npos);
}

TEST_CASE("json output parses and carries the expected shape") {
    RunResult r = run_cli("irr --builtin C4 --json");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["name"] == "C4");
    REQUIRE(doc["irr"].size() == 4);
    for (const auto& row : doc["irr"]) CHECK(row["degree"].get<long>() == 1);

    r = run_cli("theorems --builtin C2 --json");
    CHECK(r.exit_code == 0);
    doc = nlohmann::json::parse(r.out);
    bool saw_selfdual = false;
    for (const auto& f : doc["findings"]) {
        CHECK(f["pass"].is_boolean());
        if (f["id"] == "property_n_selfdual") {
            saw_selfdual = true;
            CHECK(f["pass"].get<bool>());
        }
    }
    CHECK(saw_selfdual);
}

TEST_CASE("kernel, lattice, central and property-n subcommands") {
    CHECK(run_cli("kernels --builtin C2").exit_code == 0);
    CHECK(run_cli("kernels " + data("kp8.json")).exit_code == 0);
    RunResult r = run_cli("lattice --builtin S3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("6 members") != std::string::npos);
    // quotient projections are exported for normal members, and the exported
    // quotient parses back as an algebra in the same file format
    r = run_cli("lattice --builtin S3 --json");
    CHECK(r.exit_code == 0);
    {
        nlohmann::json doc = nlohmann::json::parse(r.out);
        bool saw_quotient = false;
        for (const auto& row : doc["lattice"]) {
            if (!row.contains("quotient")) continue;
            saw_quotient = true;
            CHECK(row["quotient"]["projection"].size() == 6);
            CHECK(row["quotient"]["quotient"].contains("mult"));
        }
        CHECK(saw_quotient);
    }
    r = run_cli("central --builtin S3 --json");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["central"]["partition_y"].size() == 3);
    CHECK(run_cli("property-n --builtin V4").exit_code == 0);
}

TEST_CASE("theorem harness over a file input") {
    RunResult r = run_cli("theorems " + data("s3.json"));
    CHECK(r.exit_code == 0);
    bool clean = r.out.find("FAIL") == std::string::npos ||
                 r.out.find("informational") != std::string::npos;
    CHECK(clean);
}

TEST_CASE("reports are deterministic across runs") {
    RunResult a = run_cli("theorems --builtin Q8 --json");
    RunResult b = run_cli("theorems --builtin Q8 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run_cli("irr --builtin KP8 --json");
    RunResult d = run_cli("irr --builtin KP8 --json");
    CHECK(c.out == d.out);
}

TEST_CASE("the corpus command passes on every builtin and emits one document") {
    RunResult r = run_cli("corpus --json");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out); // a single JSON document
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 16);
    for (const auto& entry : doc) {
        CHECK(entry["all_pass"].get<bool>());
        CHECK(entry["property_n"].get<bool>());
        CHECK(entry["dim"].get<size_t>() >= 2);
        CHECK(entry["dim"].get<size_t>() <= 12);
    }
    CHECK(doc[0]["name"] == "C2");
    CHECK(doc[14]["name"] == "KP8");
}

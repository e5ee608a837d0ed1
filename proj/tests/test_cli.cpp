#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "dhero/constructions.hpp"
#include "dhero/io.hpp"
#include "verify.hpp"

using namespace dhero;
using dhero::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("dhero_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content = "") const {
        const auto p = (path_ / name).string();
        if (!content.empty()) std::ofstream(p) << content;
        return p;
    }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen ds writes the construction with its parts") {
    const auto r = call({"gen", "ds", "5"});
    REQUIRE(r.code == cli::kOk);
    std::istringstream in(r.out);
    const auto f = read_dg(in);
    CHECK(f.graph == build_ds(5).graph);
    REQUIRE(f.parts.has_value());
    CHECK(f.parts->parts.size() == 3);
}

TEST_CASE("generated files round-trip") {
    TempDir dir;
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"gen", "tt", "4"}, {"gen", "c3"}, {"gen", "ds", "6"}, {"gen", "delta", "tt:2", "c3"},
          {"gen", "arrow", "c3", "tt:2"}, {"gen", "union", "k1", "tt:2"}}) {
        const auto r = call(args);
        REQUIRE(r.code == cli::kOk);
        const auto path = dir.file("g.dg", r.out);
        const auto f = read_dg_file(path);
        CHECK(to_dg_string(f.graph, f.parts ? &*f.parts : nullptr) == r.out);
    }
    const auto out = dir.file("o.dg");
    REQUIRE(call({"gen", "ds", "4", "-o", out}).code == cli::kOk);
    CHECK(read_dg_file(out).graph == build_ds(4).graph);
}

TEST_CASE("chi on the directed triangle") {
    TempDir dir;
    const auto path = dir.file("c3.dg", to_dg_string(c3()));
    const auto r = call({"--json", "chi", path});
    REQUIRE(r.code == cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == 2);
    CHECK(j["colors"].size() == 3);
    CHECK(call({"--json", "chi", "c3"}).out == r.out);
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(call({}).code == cli::kUsage);
    CHECK(call({"frobnicate"}).code == cli::kUsage);
    CHECK(call({"gen", "ds", "2"}).code == cli::kUsage);
    CHECK(call({"chi", dir.file("missing.dg")}).code == cli::kUsage);

    const auto bad = dir.file("bad.dg", "d 3 1\na 0 9\n");
    const auto r = call({"chi", bad});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("line 2") != std::string::npos);

    CHECK(call({"find", "c3", "tt:5"}).code == cli::kFail);
    const auto found = call({"find", "tt:2", "c3"});
    CHECK(found.code == cli::kOk);
    CHECK(nlohmann::json::parse(found.out) == nlohmann::json::array({0, 1}));

    CHECK(call({"hero", "tournament", "r5"}).code == cli::kFail);
    const auto hero = call({"hero", "tournament", "c3"});
    CHECK(hero.code == cli::kOk);
    CHECK(hero.out == "(c3)\n");
    CHECK(call({"hero", "multipartite", "delta122"}).out.find("depends-on-delta122") != std::string::npos);
    CHECK(call({"hero", "multipartite", "delta122", "--assume-delta122-not-hero"}).code == cli::kFail);

    CHECK(call({"check", "multipartite", "c3"}).code == cli::kOk);
    CHECK(call({"check", "qt", dir.file("p3.dg", to_dg_string(directed_path(3)))}).code == cli::kFail);

    CHECK(call({"color", "qt", "c3", "--forbid", "c3"}).code == cli::kUsage);
    CHECK(call({"color", "qt", "c3", "--forbid", "tt:3"}).code == cli::kOk);

    const auto big = dir.file("d8.dg", to_dg_string(build_ds(8).graph));
    CHECK(call({"chi", big}).code == cli::kResource);

    CHECK(call({"verify", "nonsense"}).code == cli::kUsage);
}

TEST_CASE("verify checks pass and reports are reproducible") {
    const auto a = call({"verify", "lemma2.5", "--s", "6"});
    CHECK(a.code == cli::kOk);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["pass"] == true);
    CHECK(j.find("wall_ms") == j.end());
    CHECK(call({"verify", "2.5", "--s", "6"}).out == a.out);

    const auto b1 = call({"verify", "2.4", "--s", "7", "--samples", "200", "--seed", "9"});
    const auto b2 = call({"verify", "2.4", "--s", "7", "--samples", "200", "--seed", "9"});
    CHECK(b1.code == cli::kOk);
    CHECK(b1.out == b2.out);
    CHECK(nlohmann::json::parse(b1.out)["params"]["seed"] == 9);

    const auto timed = call({"verify", "2.1", "--count", "50", "--timing"});
    CHECK(nlohmann::json::parse(timed.out).contains("wall_ms"));

    CHECK(call({"verify", "4.2-pipeline", "--maxn", "3", "--R", "c3"}).code == cli::kOk);
}

TEST_CASE("every verification id passes with small parameters") {
    cli::VerifyParams p;
    p.samples = 50;
    p.count = 50;
    for (const auto& id : cli::verify_ids()) {
        cli::VerifyParams q = p;
        if (id == "4.2-pipeline" || id == "5.2") q.maxn = 3;
        if (id == "bounds-3.5") q.maxn = 2;
        const auto rep = cli::verify_lemma(id, q);
        CHECK_MESSAGE(rep.pass, id);
        CHECK(rep.checked > 0);
        CHECK(rep.counterexample.is_null());
    }
}

}  // TEST_SUITE

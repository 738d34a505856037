#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using catkit::cli::run_cli;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// Temp-dir fixture holding the files driven through the CLI.
struct Files {
    std::filesystem::path dir;

    Files() {
        dir = std::filesystem::temp_directory_path() /
              ("catkit-cli-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~Files() { std::filesystem::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) {
        std::filesystem::path p = dir / name;
        std::ofstream f(p);
        f << text;
        return p.string();
    }
};

const char* QUBIT_SIG = "obj Q\ngen h : Q -> Q\ngen ket0 : 0 -> Q\n";

const char* QUBIT_INTERP = R"({
  "backend": "finhilb",
  "objects": {"Q": 2},
  "generators": {
    "h": [[[0.7071067811865476, 0], [0.7071067811865476, 0]],
          [[0.7071067811865476, 0], [-0.7071067811865476, 0]]],
    "ket0": [[[1, 0]], [[0, 0]]]
  }
})";

const char* Z2_JSON = R"({
  "dim": 2,
  "unit": [[[1, 0]], [[0, 0]]],
  "mult": [[[1, 0], [0, 0], [0, 0], [1, 0]],
           [[0, 0], [1, 0], [1, 0], [0, 0]]],
  "counit": [[[1, 0], [0, 0]]]
})";

// counit zero: a degenerate pairing that validation must reject
const char* BAD_FROBENIUS = R"({
  "dim": 2,
  "unit": [[[1, 0]], [[0, 0]]],
  "mult": [[[1, 0], [0, 0], [0, 0], [1, 0]],
           [[0, 0], [1, 0], [1, 0], [0, 0]]],
  "counit": [[[0, 0], [0, 0]]]
})";

} // namespace

TEST_CASE("check-laws passes for every backend") {
    for (const std::string backend : {"finhilb", "rel", "finset", "cob2"}) {
        RunResult r = run({"check-laws", "--backend", backend, "--samples", "20", "--seed", "3",
                           "--max-size", "3"});
        CAPTURE(backend);
        CAPTURE(r.out);
        CHECK(r.code == 0);
        CHECK(contains(r.out, "backend=" + backend));
        CHECK(contains(r.out, "result: PASS"));
    }
}

TEST_CASE("check-laws output is specific to the backend") {
    RunResult h = run({"check-laws", "--backend", "finhilb", "--samples", "15"});
    CHECK(contains(h.out, "adjoint-characterization"));
    CHECK(contains(h.out, "pentagon"));
    CHECK(contains(h.out, "unit-strictness"));

    RunResult s = run({"check-laws", "--backend", "finset", "--samples", "15", "--max-size", "3"});
    CHECK(contains(s.out, "dagger obstruction: |hom({},{*})| = 1, |hom({*},{})| = 0"));
    CHECK(contains(s.out, "NOT-APPLICABLE"));
    CHECK(!contains(s.out, "unit-strictness"));
    CHECK(contains(s.out, "associator-naturality"));
}

TEST_CASE("identical seeds give byte-identical reports") {
    std::vector<std::string> args{"check-laws", "--backend", "rel", "--samples", "25",
                                  "--seed",     "42"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult c = run({"check-laws", "--backend", "rel", "--samples", "25", "--seed", "43"});
    CHECK(c.out != a.out);
}

TEST_CASE("usage errors exit with 3") {
    CHECK(run({}).code == 3);
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"check-laws"}).code == 3);
    CHECK(run({"check-laws", "--backend", "vect"}).code == 3);
    CHECK(run({"check-laws", "--backend", "rel", "--samples", "0"}).code == 3);
    CHECK(run({"eval", "--sig", "/nonexistent/sig.txt", "--interp", "/nonexistent/i.json",
               "--expr", "f"})
              .code == 3);

    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "check-laws"));
    CHECK(contains(help.out, "eval"));
}

TEST_CASE("eval runs expressions against a matrix interpretation") {
    Files files;
    std::string sig = files.write("sig.txt", QUBIT_SIG);
    std::string interp = files.write("interp.json", QUBIT_INTERP);

    RunResult r = run({"eval", "--sig", sig, "--interp", interp, "--expr", "ket0 ; h"});
    CAPTURE(r.err);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "term: ket0 ; h"));
    CHECK(contains(r.out, "type: 0 -> Q"));
    CHECK(contains(r.out, "result (2x1 matrix):"));
    CHECK(contains(r.out, "0.707107"));

    RunResult d = run({"eval", "--sig", sig, "--interp", interp, "--expr", "dag(h) ; h"});
    CHECK(d.code == 0);
    CHECK(contains(d.out, "type: Q -> Q"));
}

TEST_CASE("eval distinguishes parse, type and file errors") {
    Files files;
    std::string sig = files.write("sig.txt", QUBIT_SIG);
    std::string interp = files.write("interp.json", QUBIT_INTERP);

    RunResult parse_error = run({"eval", "--sig", sig, "--interp", interp, "--expr", "h ;"});
    CHECK(parse_error.code == 2);
    CHECK(contains(parse_error.err, "parse error"));

    RunResult type_error = run({"eval", "--sig", sig, "--interp", interp, "--expr", "ket0 ; ket0"});
    CHECK(type_error.code == 2);
    CHECK(contains(type_error.err, "cannot compose"));

    RunResult unknown = run({"eval", "--sig", sig, "--interp", interp, "--expr", "mystery"});
    CHECK(unknown.code == 2);

    std::string broken = files.write("broken.json", "{ not json");
    RunResult io_error = run({"eval", "--sig", sig, "--interp", broken, "--expr", "h"});
    CHECK(io_error.code == 3);

    // structurally valid json that does not cover the signature
    std::string sparse = files.write("sparse.json",
                                     R"({"backend": "finhilb", "objects": {"Q": 2},
                                         "generators": {}})");
    RunResult missing = run({"eval", "--sig", sig, "--interp", sparse, "--expr", "h"});
    CHECK(missing.code == 3);
}

TEST_CASE("cob normalize reports the normal form") {
    RunResult genus = run({"cob", "normalize", "--expr", "copants ; pants"});
    CHECK(genus.code == 0);
    CHECK(contains(genus.out, "type: 1 -> 1"));
    CHECK(contains(genus.out, "euler=-2"));
    CHECK(contains(genus.out, "normal form: (in={1} out={1} g=1)"));
    CHECK(contains(genus.out, "unitary: no"));

    RunResult sphere = run({"cob", "normalize", "--expr", "cup ; cap"});
    CHECK(contains(sphere.out, "type: 0 -> 0"));
    CHECK(contains(sphere.out, "normal form: (in={} out={} g=0)"));

    RunResult sw = run({"cob", "normalize", "--expr", "swap ; swap"});
    CHECK(contains(sw.out, "unitary: yes"));

    RunResult dag = run({"cob", "normalize", "--expr", "dag(pants ; cap)"});
    CHECK(contains(dag.out, "term: dag(cap) ; dag(pants)"));
    CHECK(contains(dag.out, "type: 0 -> 2"));

    CHECK(run({"cob", "normalize", "--expr", "pants ; pants"}).code == 2);
}

TEST_CASE("tqft validates the algebra and evaluates expressions") {
    Files files;
    std::string z2 = files.write("z2.json", Z2_JSON);

    RunResult torus = run({"tqft", "--frobenius", z2, "--expr", "cup ; copants ; pants ; cap"});
    CAPTURE(torus.err);
    CHECK(torus.code == 0);
    CHECK(contains(torus.out, "PASS associativity"));
    CHECK(contains(torus.out, "closed invariant: 2"));

    RunResult sphere = run({"tqft", "--frobenius", z2, "--expr", "cup ; cap"});
    CHECK(contains(sphere.out, "closed invariant: 1"));

    RunResult checks = run({"tqft", "--frobenius", z2, "--check", "functoriality", "--samples",
                            "20", "--max-size", "3"});
    CHECK(checks.code == 0);
    CHECK(contains(checks.out, "functoriality"));
    CHECK(contains(checks.out, "result: PASS"));

    RunResult dag = run({"tqft", "--frobenius", z2, "--check", "dagger", "--samples", "20",
                         "--max-size", "3"});
    CHECK(dag.code == 0);
    CHECK(contains(dag.out, "dagger-preserving"));
}

TEST_CASE("tqft fails honestly on a broken algebra") {
    Files files;
    std::string bad = files.write("bad.json", BAD_FROBENIUS);
    RunResult r = run({"tqft", "--frobenius", bad, "--expr", "cup ; cap"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "FAIL"));
    CHECK(contains(r.out, "pairing-nondegeneracy"));
    CHECK(contains(r.out, "result: FAIL"));
}

TEST_CASE("demo no-cloning collapses the solution space") {
    RunResult r = run({"demo", "no-cloning", "--dim", "2", "--seed", "7", "--samples", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "dim(A (x) A) = 4"));
    CHECK(contains(r.out, "solution dimension 8"));
    CHECK(contains(r.out, "solution dimension 0"));
    CHECK(contains(r.out, "no map clones every state"));

    RunResult r3 = run({"demo", "no-cloning", "--dim", "3", "--samples", "3"});
    CHECK(r3.code == 0);
    CHECK(contains(r3.out, "dim(A (x) A) = 9, dim(A (+) A) = 6"));

    CHECK(run({"demo", "no-cloning", "--dim", "9"}).code == 3);
}

TEST_CASE("demo bell prints the entangled state") {
    RunResult r = run({"demo", "bell"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "schmidt rank: 2"));
    CHECK(contains(r.out, "entangled: yes"));
    CHECK(contains(r.out, "product state"));
    CHECK(contains(r.out, "schmidt rank: 1"));
    CHECK(contains(r.out, "P(outcome 00) / P(outcome 11) = 1"));

    RunResult again = run({"demo", "bell"});
    CHECK(again.out == r.out);
}

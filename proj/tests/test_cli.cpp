#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/stat.h>
#include <sys/wait.h>

#include "minorkit/formats.hpp"
#include "minorkit/model.hpp"
#include "minorkit/witness_io.hpp"

using namespace minorkit;

namespace {

struct CliResult {
    int exit = -1;
    std::string out;
};

// Runs the command line through the shell, capturing stdout (stderr is
// discarded so error-path tests stay quiet).
CliResult run_cli(const std::string & args) {
    std::string cmd = std::string(MINORKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

struct TempDir {
    std::string path = "cli_scratch";
    TempDir() { mkdir(path.c_str(), 0755); }
    std::string file(const std::string & name) const { return path + "/" + name; }
};

} // namespace

TEST_CASE("generation writes canonical graph text") {
    CliResult r = run_cli("gen --kind cycle --n 5");
    CHECK(r.exit == 0);
    CHECK(r.out == "Dhc\n");

    CliResult el = run_cli("gen --kind complete --n 3 --format edgelist");
    CHECK(el.exit == 0);
    CHECK(el.out == "p 3 3\ne 0 1\ne 0 2\ne 1 2\n");

    CliResult dot = run_cli("gen --kind path --n 3 --format dot");
    CHECK(dot.exit == 0);
    CHECK(dot.out.find("graph minor {") == 0);

    CliResult seeded = run_cli("gen --kind random --n 8 --p 0.4 --seed 7");
    CHECK(seeded.exit == 0);
    CHECK(seeded.out == format_graph6(random_graph(8, 0.4, 7)) + "\n");

    CHECK(run_cli("gen --kind nonsense --n 3").exit == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit == 2);
    CHECK(run_cli("frobnicate").exit == 2);
    CHECK(run_cli("hadwiger").exit == 2);                    // missing --graph
    CHECK(run_cli("hadwiger --graph no_such_file.g6").exit == 2);
    CHECK(run_cli("gen --kind cycle --n 5 --bogus-flag").exit == 2);
    CHECK(run_cli("--help").exit == 0);
    CHECK(run_cli("hadwiger --help").exit == 0);
}

TEST_CASE("clique-minor decisions drive the exit code") {
    TempDir tmp;
    std::string c5 = tmp.file("c5.g6");
    REQUIRE(run_cli("gen --kind cycle --n 5 --out " + c5).exit == 0);

    CliResult yes = run_cli("hadwiger --graph " + c5 + " --h 3");
    CHECK(yes.exit == 0);
    CHECK(yes.out.find("status found") != std::string::npos);
    CHECK(yes.out.find("type clique_minor") != std::string::npos);

    CliResult no = run_cli("hadwiger --graph " + c5 + " --h 4");
    CHECK(no.exit == 1);
    CHECK(no.out.find("status not-found") != std::string::npos);

    CliResult max = run_cli("hadwiger --graph " + c5);
    CHECK(max.exit == 0);
    CHECK(max.out.find("hadwiger 3") != std::string::npos);
    CHECK(max.out.find("kind exact") != std::string::npos);

    // --input is an accepted alias, and each engine can be forced
    CHECK(run_cli("hadwiger --input " + c5 + " --h 3 --engine branch").exit == 0);
    CHECK(run_cli("hadwiger --input " + c5 + " --h 3 --engine contraction").exit == 0);
    CHECK(run_cli("hadwiger --input " + c5 + " --h 3 --engine warp").exit == 2);

    // witness lands in the file, verifiably
    std::string w = tmp.file("c5_w.txt");
    CliResult wit = run_cli("hadwiger --graph " + c5 + " --h 3 --witness " + w);
    CHECK(wit.exit == 0);
    CHECK(wit.out.find("type clique_minor") == std::string::npos);
    MinorModel model = parse_minor_model(read_text_file(w));
    CHECK(verify_clique_minor_model(cycle_graph(5), model).ok);
    CHECK(run_cli("verify --type clique_minor --graph " + c5 + " --witness " + w +
                  " --expect 3")
              .exit == 0);
}

TEST_CASE("domatic and paths commands decide and witness") {
    TempDir tmp;
    std::string c5 = tmp.file("c5b.g6");
    REQUIRE(run_cli("gen --kind cycle --n 5 --out " + c5).exit == 0);

    CliResult two = run_cli("domatic --graph " + c5 + " --d 2");
    CHECK(two.exit == 0);
    CHECK(two.out.find("status found") != std::string::npos);
    CHECK(run_cli("domatic --graph " + c5 + " --d 3").exit == 1);
    CliResult dmax = run_cli("domatic --graph " + c5);
    CHECK(dmax.exit == 0);
    CHECK(dmax.out.find("domatic 2") != std::string::npos);

    // two crossing chords of a 4-cycle cannot be routed disjointly
    std::string blocked = tmp.file("c4_cross.txt");
    write_text_file(blocked, "p 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\nd 0 2\nd 1 3\n");
    CliResult nop = run_cli("paths --instance " + blocked);
    CHECK(nop.exit == 1);
    CHECK(nop.out.find("status not-found") != std::string::npos);

    std::string open = tmp.file("k4_cross.txt");
    write_text_file(open,
                    "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\nd 0 2\nd 1 3\n");
    std::string pw = tmp.file("k4_w.txt");
    CliResult yep = run_cli("paths --instance " + open + " --witness " + pw);
    CHECK(yep.exit == 0);
    CHECK(run_cli("verify --type paths --instance " + open + " --witness " + pw)
              .exit == 0);
}

TEST_CASE("reduce, solve, verify, and translate round trip (dominating sets)") {
    TempDir tmp;
    std::string c5 = tmp.file("c5c.g6");
    REQUIRE(run_cli("gen --kind cycle --n 5 --out " + c5).exit == 0);

    std::string gp = tmp.file("gp.g6"), lab = tmp.file("lab.txt");
    CliResult red = run_cli("reduce --from domatic --input " + c5 +
                            " --d 2 --out-graph " + gp + " --out-labeling " + lab);
    CHECK(red.exit == 0);
    CHECK(red.out.find("kind layered") != std::string::npos);
    CHECK(red.out.find("h 32") != std::string::npos);
    CHECK(red.out.find("vertices 37") != std::string::npos);
    CHECK(red.out.find("stripped 0") != std::string::npos);
    CHECK(red.out.find("d-core 2") != std::string::npos);

    std::string w = tmp.file("gp_w.txt");
    CHECK(run_cli("hadwiger --graph " + gp + " --h 32 --witness " + w).exit == 0);

    // a starved budget is a distinct outcome
    CliResult starved = run_cli("hadwiger --graph " + gp + " --h 32 --budget 5");
    CHECK(starved.exit == 3);
    CHECK(starved.out.find("status indeterminate") != std::string::npos);

    std::string fam = tmp.file("fam.txt");
    CHECK(run_cli("verify --type clique_minor --graph " + gp + " --witness " + w +
                  " --expect 32 --labeling " + lab + " --core " + c5 +
                  " --translate-out " + fam)
              .exit == 0);
    CliResult vfam = run_cli("verify --type domatic --graph " + c5 + " --witness " +
                             fam + " --expect 2");
    CHECK(vfam.exit == 0);
    CHECK(vfam.out == "valid\n");

    // a wrong --expect flips the verdict
    CliResult bad = run_cli("verify --type domatic --graph " + c5 + " --witness " +
                            fam + " --expect 3");
    CHECK(bad.exit == 1);
    CHECK(bad.out.find("invalid:") == 0);

    // trivial outcomes are labeled as such
    std::string k3 = tmp.file("k3.g6");
    REQUIRE(run_cli("gen --kind complete --n 3 --out " + k3).exit == 0);
    CliResult triv = run_cli("reduce --from domatic --graph " + k3 + " --d 3");
    CHECK(triv.exit == 0);
    CHECK(triv.out.find("kind trivially-positive") != std::string::npos);

    // the raw builder skips stripping on request
    CliResult raw = run_cli("reduce --from domatic --graph " + k3 +
                            " --d 3 --no-strip");
    CHECK(raw.exit == 0);
    CHECK(raw.out.find("kind layered") != std::string::npos);
    CHECK(raw.out.find("vertices 18") != std::string::npos); // 12 + 3 + 3
    CHECK(raw.out.find("h 15") != std::string::npos);
}

TEST_CASE("reduce, solve, verify, and translate round trip (disjoint paths)") {
    TempDir tmp;
    std::string inst = tmp.file("c5_paths.txt");
    write_text_file(inst, "p 5 5\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\nd 0 2\n");

    std::string pg = tmp.file("pg.g6"), map = tmp.file("map.txt");
    CliResult red = run_cli("reduce --from paths --instance " + inst +
                            " --out-graph " + pg + " --out-map " + map);
    CHECK(red.exit == 0);
    CHECK(red.out.find("h 6") != std::string::npos);
    CHECK(red.out.find("vertices 9") != std::string::npos);

    std::string w = tmp.file("pg_w.txt");
    CHECK(run_cli("hadwiger --graph " + pg + " --h 6 --witness " + w).exit == 0);

    std::string ps = tmp.file("ps.txt");
    CHECK(run_cli("verify --type clique_minor --graph " + pg + " --witness " + w +
                  " --paths-map " + map + " --instance " + inst +
                  " --translate-out " + ps)
              .exit == 0);
    CHECK(run_cli("verify --type paths --instance " + inst + " --witness " + ps)
              .exit == 0);
}

TEST_CASE("consistency sweeps succeed and fail loudly") {
    CliResult ok = run_cli("crosscheck --reduction domatic --max-n 2 --max-d 2");
    CHECK(ok.exit == 0);
    CHECK(ok.out.find("AGREE 6/6") != std::string::npos);

    CliResult pok = run_cli("crosscheck --reduction paths --max-n 3 --max-k 1");
    CHECK(pok.exit == 0);
    CHECK(pok.out.find("AGREE 26/26") != std::string::npos);

    CliResult starved =
        run_cli("crosscheck --reduction domatic --max-n 3 --max-d 2 --budget 1");
    CHECK(starved.exit == 1);
    CHECK(starved.out.find("target=?") != std::string::npos);

    CliResult timed =
        run_cli("crosscheck --reduction domatic --max-n 2 --max-d 1 --timings");
    CHECK(timed.exit == 0);
    CHECK(timed.out.find("time=") != std::string::npos);
}

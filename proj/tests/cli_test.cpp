// End-to-end checks of the vfilt binary: output values, the JSON round trip
// (parse the emitted JSON, recompute in-process, compare), and exit codes.
// The binary path comes in as argv[1].

#include "vfilt/filtration.hpp"
#include "vfilt/json_io.hpp"
#include "vfilt/spaces.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot spawn: " << cmd << "\n";
        std::exit(1);
    }
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: vfilt_cli_test <path-to-vfilt>\n";
        return 1;
    }
    g_binary = argv[1];
    using namespace vfilt;
    using nlohmann::json;

    // rendered b-function
    RunResult r = run("bfun --space det --n 2 --weight 0,0");
    expect(r.exit_code == 0, "bfun exit code");
    expect(r.out.find("(s+1)(s+2)") != std::string::npos, "bfun rendering: got " + r.out);

    // pinned p-function
    r = run("pfun --space det --n 2 --weight 0,0 --alpha 3");
    expect(r.out.find("(s+1)(s+2)^2") != std::string::npos, "pfun alpha=3 rendering: " + r.out);

    // JSON round trip: parse the emitted polynomial and recompute in-process
    r = run("pfun --space det --n 2 --weight 0,0 --alpha 3 --json");
    expect(r.exit_code == 0, "pfun --json exit code");
    {
        json doc = json::parse(r.out);
        RootPoly emitted = root_poly_from_json(doc.at("p"));
        SpaceFamily det2 = SpaceFamily::builtin("det", 2);
        std::vector<long> w{0, 0};
        RootPoly recomputed = p_function(det2.b_of_weight(w), Rational(3)).poly;
        expect(emitted == recomputed, "pfun JSON round trip");
        expect(doc.at("degree") == 3, "pfun degree field");
    }

    // ideal weight set round trip, including the primary decomposition
    r = run("ideal --space e6 --k 5 --alpha 1/10 --degree-bound 3 --route both --json");
    expect(r.exit_code == 0, "ideal exit code");
    {
        json doc = json::parse(r.out);
        SpaceFamily e6 = SpaceFamily::builtin("e6", 27);
        WeightSet recomputed =
            ideal_weight_set(e6, 5, rational_from_string("1/10"), 3, IdealRoute::both);
        expect(doc.at("weights").get<std::vector<std::vector<long>>>() == recomputed.weights,
               "ideal JSON weights round trip");
        expect(doc.at("primary_decomposition").size() == recomputed.primary.size(),
               "ideal primary decomposition size");
        expect(to_json(recomputed) == doc, "ideal full JSON equality");
    }

    // threads do not change the output
    {
        RunResult serial = run("ideal --space det --n 3 --k 2 --alpha 1 --degree-bound 3 --json");
        RunResult parallel =
            run("ideal --space det --n 3 --k 2 --alpha 1 --degree-bound 3 --threads 3 --json");
        expect(serial.out == parallel.out, "threaded enumeration is deterministic");
    }

    // space file loading matches the built-in
    {
        std::string path = "vfilt_cli_test_space.json";
        std::ofstream file(path);
        file << to_json(SpaceFamily::builtin("e6", 27).affine_view()).dump();
        file.close();
        RunResult from_file = run("bfun --space-file " + path + " --weight 1,0,2 --json");
        RunResult builtin = run("bfun --space e6 --weight 1,0,2 --json");
        expect(from_file.exit_code == 0, "space-file exit code");
        expect(json::parse(from_file.out).at("b") == json::parse(builtin.out).at("b"),
               "space file b-function matches the built-in");
        std::remove(path.c_str());
    }

    // grv at a single weight
    r = run("grv --space det --n 2 --weight 0,0 --alpha 1 --level 0 --json");
    expect(r.exit_code == 0, "grv exit code");
    {
        json doc = json::parse(r.out);
        expect(doc.at("entries").size() == 1, "grv single-weight entry count");
        expect(doc.at("entries")[0].at("nu") == 1, "grv nu value");
        expect(doc.at("entries")[0].at("exponent") == 1, "grv exponent value");
    }

    // fs-test with a Pi file
    {
        std::string path = "vfilt_cli_test_pi.json";
        std::ofstream file(path);
        file << to_json(PiSets::structure_sheaf(-1, 3, 3)).dump();
        file.close();
        r = run("fs-test --space det --n 2 --weight 0,0 --alpha 3 --k 3 --pi-file " + path +
                " --json");
        expect(r.exit_code == 0, "fs-test exit code");
        expect(json::parse(r.out).at("member") == true, "fs-test membership");
        std::remove(path.c_str());
    }

    // usage errors exit 1
    expect(run("bfun --space frobenius --n 2 --weight 0,0").exit_code == 1, "unknown space is exit 1");
    expect(run("bfun --space det --n 2 --weight 0,1").exit_code == 1, "non-dominant weight is exit 1");
    expect(run("pfun --space det --n 2 --weight 0,0").exit_code == 1, "missing --alpha is exit 1");
    expect(run("ideal --space det --n 2 --k 1 --alpha 0 --degree-bound 2").exit_code == 1,
           "alpha = 0 ideal is a usage error");
    expect(run("nosuchcommand").exit_code == 1, "unknown subcommand is exit 1");

    // self check (trimmed) passes
    r = run("check --cases 8 --seed 42");
    expect(r.exit_code == 0, "vfilt check exits 0");
    expect(r.out.find("all checks passed") != std::string::npos, "vfilt check summary");

    if (g_failures == 0) std::cout << "cli: all checks passed\n";
    return g_failures == 0 ? 0 : 1;
}

// End-to-end checks of the CLI binary: exit codes, output schemas and
// byte-identical reruns. The path to the binary arrives as argv[1].

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
std::string cli;

void expect(bool ok, const std::string& what) {
    if (!ok) ++failures;
    std::printf("%-58s %s\n", what.c_str(), ok ? "PASS" : "FAIL");
}

int run(const std::string& args) {
    const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <path-to-qps>\n";
        return 2;
    }
    cli = argv[1];

    expect(run("verify --suite schwinger --dim 8") == 0,
           "verify schwinger --dim 8 exits 0");
    expect(run("verify --suite metaplectic --dim 6") == 2,
           "verify metaplectic --dim 6 exits 2 (domain)");
    expect(run("verify --suite metaplectic --dim 13") == 0,
           "verify metaplectic --dim 13 exits 0");
    expect(run("verify --suite nope --dim 8") == 2, "unknown suite exits 2");
    expect(run("wigner --dim 17 --state split:8 --thetas 64 --out /tmp/w1.csv") == 0,
           "wigner split:8 runs");
    expect(run("wigner --dim 17 --state split:8 --thetas 64 --out /tmp/w2.csv") == 0,
           "wigner rerun");
    expect(slurp("/tmp/w1.csv") == slurp("/tmp/w2.csv") && !slurp("/tmp/w1.csv").empty(),
           "wigner outputs byte-identical");

    // the J = 7.5 rows carry the cos(theta)/2pi profile
    {
        std::ifstream f("/tmp/w1.csv");
        std::string line;
        std::getline(f, line);
        expect(line == "J,theta,W", "wigner CSV header");
        bool profile_ok = true;
        int rows = 0;
        while (std::getline(f, line)) {
            const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
            const double j = std::stod(line.substr(0, c1));
            const double th = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
            const double w = std::stod(line.substr(c2 + 1));
            if (j == 7.5) {
                ++rows;
                profile_ok = profile_ok &&
                             std::abs(w - std::cos(th) / (2 * M_PI)) < 1e-10;
            }
        }
        expect(profile_ok && rows == 64, "wigner J=7.5 column is cos(theta)/2pi");
    }

    expect(run("marginals --dim 17 --state fock:4 --out /tmp/m1.csv") == 0,
           "marginals runs");
    expect(run("evolve --dim 9 --state split:4 --hamiltonian 1.0*n --steps 4 "
               "--out /tmp/e1.csv") == 0,
           "evolve runs");
    expect(run("metaplectic --dim 7 --seed 3 --out /tmp/g1.json") == 0,
           "metaplectic runs");
    expect(run("metaplectic --dim 7 --seed 3 --out /tmp/g2.json") == 0,
           "metaplectic rerun");
    expect(slurp("/tmp/g1.json") == slurp("/tmp/g2.json"), "metaplectic deterministic");
    expect(run("metaplectic --dim 8") == 2, "metaplectic even dim exits 2");
    expect(run("symbol --dim 9 --hamiltonian n^2 --out /tmp/s1.csv") == 0,
           "symbol runs");
    expect(run("evolve --dim 9 --state split:0 --hamiltonian 1.0*n") == 2,
           "state parse error exits 2");
    expect(run("evolve --dim 9 --state split:4 --hamiltonian n^9") == 2,
           "degree overflow exits 2");

    // config file mirrors flags; flags win on re-parse
    {
        std::ofstream cfg("/tmp/qps_cfg.json");
        cfg << "{\"dim\": 17, \"state\": \"split:8\", \"thetas\": 64}";
    }
    expect(run("wigner --config /tmp/qps_cfg.json --out /tmp/w3.csv") == 0,
           "config file accepted");
    expect(slurp("/tmp/w3.csv") == slurp("/tmp/w1.csv"), "config mirrors the flags");
    expect(run("wigner --config /tmp/qps_cfg.json --thetas 32 --out /tmp/w4.csv") == 0,
           "config with flag override");
    expect(slurp("/tmp/w4.csv") != slurp("/tmp/w3.csv"), "explicit flag wins");

    expect(run("verify --suite all --dim 13 --out /tmp/v1.json") == 0,
           "verify all --dim 13 exits 0");
    expect(run("verify --suite all --dim 13 --out /tmp/v2.json") == 0, "verify rerun");
    expect(slurp("/tmp/v1.json") == slurp("/tmp/v2.json"),
           "verify reports byte-identical");

    std::printf("%s\n", failures == 0 ? "ALL PASS" : "FAILURES");
    return failures == 0 ? 0 : 1;
}

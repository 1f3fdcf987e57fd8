// end-to-end smoke checks against the installed CLI binary

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#ifndef GEGCHAIN_CLI_PATH
#error "GEGCHAIN_CLI_PATH must point at the CLI binary"
#endif

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(GEGCHAIN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

} // namespace

int main() {
    {
        const RunResult r = run("table1 --n-max 3 --format csv");
        expect(r.exit_code == 0, "table1 csv exits 0");
        expect(r.output.find("N,G,G_prime,G_double_prime") != std::string::npos,
               "table1 csv header");
        expect(r.output.find("0.81649658") != std::string::npos,
               "table1 csv contains the 3x3 boundary");
        expect(r.output.find("1,inf,") != std::string::npos, "table1 csv N=1 row");
    }
    {
        const RunResult r = run("dump --object zeros --n 2 --a 1");
        expect(r.exit_code == 0, "dump zeros exits 0");
        expect(r.output.find("\"index_base\": 0") != std::string::npos,
               "json envelope declares 0-based indexing");
        expect(r.output.find("-0.5") != std::string::npos, "dump zeros contains -0.5");
    }
    {
        const RunResult r = run("residual --object theta0 --n 12 --a 2");
        expect(r.exit_code == 0, "residual exits 0");
    }
    {
        const RunResult r = run("table1 --no-such-flag");
        expect(r.exit_code == 2, "unknown flag exits 2");
    }
    {
        const RunResult r = run("dump --object nonsense --n 4");
        expect(r.exit_code == 2, "bad selector exits 2");
    }
    {
        const RunResult r = run("table1 --a -1");
        expect(r.exit_code == 2, "a <= 0 exits 2");
    }
    {
        // a 2x2 metric never develops two negative eigenvalues
        const RunResult r = run("boundary --n 2 --max-negatives 1");
        expect(r.exit_code == 3, "unreachable boundary exits 3");
    }
    {
        const RunResult a = run("fig1 --n 3 --samples 7 --format csv");
        const RunResult b = run("fig1 --n 3 --samples 7 --format csv");
        expect(a.exit_code == 0 && a.output == b.output, "fig1 output is deterministic");
    }
    return failures == 0 ? 0 : 1;
}

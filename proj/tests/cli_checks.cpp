// End-to-end checks of the command-line tool. argv[1] is the binary path;
// every command is run through the shell and the captured bytes and exit
// codes are compared against the documented contract.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "charvar/compactified.hpp"
#include "charvar/json_io.hpp"
#include "charvar/stability.hpp"

using namespace charvar;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    std::fprintf(stderr, "FAIL: %s\n", what.c_str());
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {};
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::vector<EigenvalueData> prime_eigen(size_t n) {
    static const long primes[] = {2, 3, 5, 7, 11};
    std::vector<EigenvalueData> out;
    for (size_t i = 0; i < n; ++i) out.emplace_back(Rational(primes[i]));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_checks <path-to-cli>\n");
        return 2;
    }
    const std::string cli = argv[1];

    // dimension: plain number on stdout, exit 0; parse errors exit nonzero.
    {
        const auto r = run(cli + " dimension --mu '1,1;1,1;1,1;1,1' 2>/dev/null");
        check(r.code == 0 && r.out == "2\n", "dimension prints 2");
        const auto r2 = run(cli + " dimension --g 1 --mu '1' 2>/dev/null");
        check(r2.code == 0 && r2.out == "0\n", "dimension handles genus 1");
        const auto bad = run(cli + " dimension --mu '1,,2' 2>&1");
        check(bad.code != 0 && contains(bad.out, "error:"), "dimension rejects bad mu");
        const auto j = run(cli + " dimension --mu '1,1;1,1;1,1;1,1;1,1' --json 2>/dev/null");
        check(j.code == 0 && contains(j.out, "\"dimension\": 4"), "dimension --json");
    }

    // fk-verify: sample count line, deterministic bytes, --output mirror.
    {
        const auto r = run(cli + " fk-verify --samples 50 2>/dev/null");
        check(r.code == 0 && r.out == "50/50 exact zeros\n", "fk-verify counts zeros");
        const auto a = run(cli + " fk-verify --samples 25 --seed 9 2>/dev/null");
        const auto b = run(cli + " fk-verify --samples 25 --seed 9 2>/dev/null");
        check(a.code == 0 && a.out == b.out, "fk-verify is deterministic");
        const auto c = run(cli + " fk-verify --samples 25 --seed 9 --output cli_fk.txt 2>/dev/null");
        check(c.code == 0 && read_text_file("cli_fk.txt") == c.out,
              "--output mirrors stdout bytes");
        const auto zero = run(cli + " fk-verify --samples 0 2>&1");
        check(zero.code != 0 && contains(zero.out, "samples must be at least 1"),
              "fk-verify rejects zero samples");
    }

    // sl3-fit: all three settings verified with the default sample count.
    {
        const auto r = run(cli + " sl3-fit 2>/dev/null");
        check(r.code == 0 && contains(r.out, "3/3 settings verified"), "sl3-fit verifies");
        check(contains(r.out, "setting 0: monic quadratic relation recovered"),
              "sl3-fit per-setting line");
    }

    // stability and limit on a written fixture of the first special orbit.
    {
        const auto e5 = prime_eigen(5);
        write_text_file("cli_s1.json", config_to_json(s1_configuration(e5)).dump(2) + "\n");
        const auto r = run(cli + " stability --input cli_s1.json 2>/dev/null");
        check(r.code == 0, "stability exits 0 on agreement");
        check(contains(r.out, "closed form: strictly_semistable (m1 = 2, m2 = 0)"),
              "stability closed-form line");
        check(contains(r.out, "agreement: yes"), "stability agreement line");
        const auto j = run(cli + " stability --input cli_s1.json --json 2>/dev/null");
        check(j.code == 0 && contains(j.out, "\"verdict\": \"strictly_semistable\""),
              "stability --json verdict");
        check(contains(j.out, "\"mu_min\": 0"), "stability --json mu_min");

        const auto lim = run(cli + " limit --input cli_s1.json --direction 1 2>/dev/null");
        check(lim.code == 0 && contains(lim.out, "orbit: s1"), "limit names the orbit");
        check(contains(lim.out, "\"alphas\""), "limit prints the configuration");

        // A matrix off its class is reported by position.
        nlohmann::json bad;
        bad["n"] = 4;
        bad["alphas"] = {"2", "3", "5", "7"};
        bad["matrices"] = nlohmann::json::array();
        bad["matrices"].push_back({{"a", "2"}, {"b", "1"}, {"c", "0"}, {"d", "1/2"}, {"e", "1"}});
        bad["matrices"].push_back({{"a", "4"}, {"b", "0"}, {"c", "0"}, {"d", "1/4"}, {"e", "1"}});
        bad["matrices"].push_back({{"a", "5"}, {"b", "1"}, {"c", "0"}, {"d", "1/5"}, {"e", "1"}});
        write_text_file("cli_offclass.json", bad.dump(2) + "\n");
        const auto off = run(cli + " stability --input cli_offclass.json 2>&1");
        check(off.code != 0 && contains(off.out, "matrix 2 does not satisfy its class equations"),
              "stability names the offending matrix");
    }

    // complex: certification lines and the unknown-case error.
    {
        const auto n4 = run(cli + " complex --case n4 --certify 1 2>/dev/null");
        check(n4.code == 0 && contains(n4.out, "S¹: PASS"), "n4 certifies as a circle");
        check(contains(n4.out, "f-vector: 3 3"), "n4 f-vector");
        const auto eq = run(cli + " complex --case n5-equator --certify 2 2>/dev/null");
        check(eq.code == 0 && contains(eq.out, "S²: PASS"), "equator certifies as a 2-sphere");
        const auto full = run(cli + " complex --case n5-full --certify 3 2>/dev/null");
        check(full.code == 0 && contains(full.out, "S³: PASS"), "full complex is a 3-sphere");
        check(contains(full.out, "f-vector: 10 34 48 24"), "full f-vector");
        check(contains(full.out, "torsion: none"), "full complex torsion line");
        const auto wrong = run(cli + " complex --case n5-full --certify 2 2>/dev/null");
        check(wrong.code != 0 && contains(wrong.out, "S²: FAIL"),
              "wrong dimension fails certification");
        const auto bogus = run(cli + " complex --case n6 2>&1");
        check(bogus.code != 0 && contains(bogus.out, "unknown case: n6"),
              "unknown case is reported");
    }

    // identities: registry summary, listing, and the negative control.
    {
        const auto r = run(cli + " identities 2>/dev/null");
        check(r.code == 0 && r.out == "7/7 identities hold\n", "identities all hold");
        const auto list = run(cli + " identities --list 2>/dev/null");
        check(list.code == 0, "identities --list exits 0");
        size_t lines = 0, pos = 0;
        while ((pos = list.out.find('\n', pos)) != std::string::npos) ++lines, ++pos;
        check(lines == 7, "identities --list prints seven lines");
        check(contains(list.out, "closure-trace: "), "list includes statements");
        const auto neg = run(cli + " identities --negative-control 2>/dev/null");
        check(neg.code != 0 &&
                  contains(neg.out, "identity 'n5-quintic-factorization' FAILED"),
              "negative control shows the failure format");
        check(contains(neg.out, "0/1 identities hold"), "negative control tally");
    }

    // Missing subcommand and unknown flags exit nonzero.
    {
        check(run(cli + " 2>/dev/null").code != 0, "bare invocation fails");
        check(run(cli + " identities --bogus-flag 2>/dev/null").code != 0,
              "unknown flag fails");
    }

    if (failures == 0) {
        std::printf("cli checks: all passed\n");
        return 0;
    }
    std::printf("cli checks: %d failure(s)\n", failures);
    return 1;
}

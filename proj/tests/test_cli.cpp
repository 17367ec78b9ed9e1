#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "salpeter/cli.hpp"
#include "salpeter/config.hpp"
#include "salpeter/io.hpp"

using namespace salpeter;

namespace {

RunConfig parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

double summary_value(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + "=", 0) == 0) return std::strtod(line.c_str() + key.size() + 1, nullptr);
    }
    FAIL("summary key not found: " << key);
    return 0.0;
}

}  // namespace

TEST_CASE("seventeen digit formatting round-trips doubles", "[cli]") {
    for (double x : {0.1, -0.75, 0.91, 1.0 / 3.0, 6.62607015e-34, 1.2345678901234567e300}) {
        const std::string s = format_g17(x);
        REQUIRE(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("minimal config applies defaults elsewhere", "[cli]") {
    const RunConfig cfg = parse_text("v = 0.5\n");
    REQUIRE(cfg.v == 0.5);
    REQUIRE(cfg.m == 1.0);
    REQUIRE(cfg.c == 1.0);
    REQUIRE(cfg.hbar == 1.0);
    REQUIRE(cfg.n == 256);
    REQUIRE(cfg.length == 64.0);
    REQUIRE(cfg.dt == 1e-3);
    REQUIRE_FALSE(cfg.tol.has_value());
    REQUIRE(cfg.seed == 42);
    REQUIRE(cfg.out.empty());
    REQUIRE(cfg.modes.empty());
}

TEST_CASE("config parser rejects bad input with messages naming the cause", "[cli]") {
    REQUIRE_THROWS_WITH(parse_text("v = 1.2\n"),
                        Catch::Matchers::ContainsSubstring("'v'"));
    REQUIRE_THROWS_WITH(parse_text("zug = 1\n"),
                        Catch::Matchers::ContainsSubstring("unknown key 'zug'"));
    REQUIRE_THROWS_WITH(parse_text("v 0.5\n"),
                        Catch::Matchers::ContainsSubstring("line 1"));
    REQUIRE_THROWS_WITH(parse_text("amp = 1\n"),
                        Catch::Matchers::ContainsSubstring("[mode]"));
    REQUIRE_THROWS_WITH(parse_text("v = fast\n"),
                        Catch::Matchers::ContainsSubstring("invalid number for key 'v'"));
    REQUIRE_THROWS_WITH(parse_text("n = 255\n"),
                        Catch::Matchers::ContainsSubstring("'n'"));
    REQUIRE_THROWS_WITH(parse_text("n = ten\n"),
                        Catch::Matchers::ContainsSubstring("invalid integer for key 'n'"));
    REQUIRE_THROWS_WITH(parse_text("dt = 0\n"),
                        Catch::Matchers::ContainsSubstring("'dt'"));
    REQUIRE_THROWS_WITH(parse_text("[mode]\namp = -1\n"),
                        Catch::Matchers::ContainsSubstring("'amp'"));
    REQUIRE_THROWS_AS(load_config("definitely_missing_config_file.cfg"), std::invalid_argument);
    REQUIRE_THROWS_WITH(load_config("definitely_missing_config_file.cfg"),
                        Catch::Matchers::ContainsSubstring("definitely_missing_config_file.cfg"));
}

TEST_CASE("config with modes round-trips through serialize and parse", "[cli]") {
    RunConfig cfg;
    cfg.m = 2.0;
    cfg.c = 3.0;
    cfg.hbar = 5.0;
    cfg.n = 128;
    cfg.length = 100.0;
    cfg.v = -0.4 * cfg.c;
    cfg.dt = 1.0 / 3.0;
    cfg.tol = 1e-9;
    cfg.seed = 1234567890123456789ull;
    cfg.out = "result.tsv";
    cfg.modes = {{0.8, 0.5, 0.75}, {0.6, -0.9, -0.5}};

    const RunConfig back = parse_text(serialize_config(cfg));
    REQUIRE(back.m == cfg.m);
    REQUIRE(back.c == cfg.c);
    REQUIRE(back.hbar == cfg.hbar);
    REQUIRE(back.n == cfg.n);
    REQUIRE(back.length == cfg.length);
    REQUIRE(back.v == cfg.v);
    REQUIRE(back.dt == cfg.dt);
    REQUIRE(back.tol == cfg.tol);
    REQUIRE(back.seed == cfg.seed);
    REQUIRE(back.out == cfg.out);
    REQUIRE(back.modes.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        REQUIRE(back.modes[i].amp == cfg.modes[i].amp);
        REQUIRE(back.modes[i].phase == cfg.modes[i].phase);
        REQUIRE(back.modes[i].p == cfg.modes[i].p);
    }
}

TEST_CASE("config accepts comments and blank lines", "[cli]") {
    const RunConfig cfg = parse_text("# a comment\n\nv = 0.25  # trailing note\n[mode]\np = 1\n");
    REQUIRE(cfg.v == 0.25);
    REQUIRE(cfg.modes.size() == 1);
    REQUIRE(cfg.modes[0].p == 1.0);
    REQUIRE(cfg.modes[0].amp == 1.0);
}

TEST_CASE("residual report flag reflects exactly the checked entries", "[cli]") {
    ResidualReport rep;
    rep.add("informational", 123.0);
    REQUIRE(rep.pass());
    rep.check("small", 1e-13, 1e-12);
    REQUIRE(rep.pass());
    rep.check("big", -2e-6, 1e-6);
    REQUIRE_FALSE(rep.pass());
    REQUIRE(rep.value("big") == -2e-6);
    REQUIRE_THROWS_AS(rep.value("absent"), std::out_of_range);

    std::ostringstream out;
    rep.print(out);
    REQUIRE(out.str() ==
            "informational=123\nsmall=1e-13\nbig=-1.9999999999999999e-06\npass=0\n");
}

TEST_CASE("table writer emits the resolved config header", "[cli]") {
    Table t;
    t.columns = {"x", "y"};
    t.add_row({"1", "2"});
    REQUIRE_THROWS_AS(t.add_row({"only-one"}), std::invalid_argument);

    RunConfig cfg;
    cfg.modes = {{1.0, 0.0, 0.75}};
    std::ostringstream out;
    write_table(out, "demo", cfg, {{"extra", "7"}}, t);
    const std::string text = out.str();
    REQUIRE(text.rfind("# command: demo\n", 0) == 0);
    REQUIRE(text.find("# v = 0.5\n") != std::string::npos);
    REQUIRE(text.find("# [mode]\n") != std::string::npos);
    REQUIRE(text.find("# extra = 7\n") != std::string::npos);
    REQUIRE(text.find("# columns:\tx\ty\n1\t2\n") != std::string::npos);
}

TEST_CASE("cli rejects missing or unknown subcommands and bad flags", "[cli]") {
    REQUIRE(run_cli({}).exit_code == 2);
    REQUIRE(run_cli({"bogus"}).exit_code == 2);
    REQUIRE(run_cli({"ratio-surface", "--nope", "1"}).exit_code == 2);
    REQUIRE(run_cli({"ratio-surface", "--steps", "1"}).exit_code == 2);
    REQUIRE(run_cli({"ratio-surface", "--v", "1.5"}).exit_code == 2);
    REQUIRE(run_cli({"kernel", "--z-min", "-1"}).exit_code == 2);
    REQUIRE(run_cli({"--help"}).exit_code == 0);
    REQUIRE(run_cli({"born-residual", "--help"}).out.find("--p1") != std::string::npos);
}

TEST_CASE("born residual summary carries the canonical numbers", "[cli]") {
    const RunResult r = run_cli({"born-residual", "--p1", "0.75", "--p2", "-0.75", "--v", "0.5"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(summary_value(r.out, "ratio") == Catch::Approx(0.91).margin(1e-12));
    REQUIRE(summary_value(r.out, "r") == Catch::Approx(-0.046060798583054).margin(1e-12));
    REQUIRE(summary_value(r.out, "inconsistent") == 1.0);
    REQUIRE(summary_value(r.out, "pass") == 1.0);
}

TEST_CASE("identity sweep passes at its default tolerance", "[cli]") {
    const RunResult r = run_cli({"sweep-identities", "--seed", "42", "--samples", "500", "--assert"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(summary_value(r.out, "pass") == 1.0);
    REQUIRE(summary_value(r.out, "beta_alpha_residual") <= 1e-12);
}

TEST_CASE("assert turns a failed check into exit code one", "[cli]") {
    const RunResult strict = run_cli({"dirac-check", "--tol", "1e-30", "--assert"});
    REQUIRE(strict.exit_code == 1);
    REQUIRE(summary_value(strict.out, "pass") == 0.0);

    const RunResult loose = run_cli({"dirac-check", "--tol", "1e-30"});
    REQUIRE(loose.exit_code == 0);
}

TEST_CASE("config file supplies defaults that flags override", "[cli]") {
    write_file("cli_test_v.cfg", "v = 0.25\n");
    const RunResult from_config = run_cli({"born-residual", "--config", "cli_test_v.cfg"});
    REQUIRE(from_config.exit_code == 0);
    REQUIRE(summary_value(from_config.out, "ratio") == Catch::Approx(0.9775).margin(1e-12));

    const RunResult overridden =
        run_cli({"born-residual", "--config", "cli_test_v.cfg", "--v", "0.5"});
    REQUIRE(summary_value(overridden.out, "ratio") == Catch::Approx(0.91).margin(1e-12));
    std::remove("cli_test_v.cfg");

    const RunResult missing = run_cli({"born-residual", "--config", "cli_test_absent.cfg"});
    REQUIRE(missing.exit_code == 2);
    REQUIRE(missing.err.find("cli_test_absent.cfg") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical tables", "[cli]") {
    for (const std::vector<std::string> base :
         {std::vector<std::string>{"ratio-surface", "--steps", "9"},
          std::vector<std::string>{"sweep-identities", "--samples", "100"},
          std::vector<std::string>{"evolve", "--t", "0.5", "--n", "64", "--length", "32"},
          std::vector<std::string>{"kernel", "--steps", "20"},
          std::vector<std::string>{"series", "--p", "0.5", "--k-max", "12"}}) {
        std::vector<std::string> first = base;
        first.insert(first.end(), {"--out", "cli_test_a.tsv"});
        std::vector<std::string> second = base;
        second.insert(second.end(), {"--out", "cli_test_b.tsv"});
        REQUIRE(run_cli(first).exit_code == 0);
        REQUIRE(run_cli(second).exit_code == 0);
        REQUIRE(slurp("cli_test_a.tsv") == slurp("cli_test_b.tsv"));
        std::remove("cli_test_a.tsv");
        std::remove("cli_test_b.tsv");
    }
}

TEST_CASE("evolve and continuity run clean on a modest grid", "[cli]") {
    const RunResult ev = run_cli({"evolve", "--t", "2", "--n", "128", "--length", "32", "--assert"});
    REQUIRE(ev.exit_code == 0);
    REQUIRE(summary_value(ev.out, "norm_drift") <= 1e-12);

    const RunResult co = run_cli(
        {"continuity", "--t", "1", "--dt", "0.001", "--n", "128", "--length", "32", "--assert"});
    REQUIRE(co.exit_code == 0);
    REQUIRE(summary_value(co.out, "continuity_residual_born") <= 1e-6);
    REQUIRE(summary_value(co.out, "continuity_residual_dirac") <= 1e-6);
}

TEST_CASE("series table reports convergence inside the radius", "[cli]") {
    const RunResult inside = run_cli({"series", "--p", "0.5", "--k-max", "30", "--assert"});
    REQUIRE(inside.exit_code == 0);
    REQUIRE(summary_value(inside.out, "final_error") <= 1e-8);
    REQUIRE(summary_value(inside.out, "inside_radius") == 1.0);

    const RunResult outside = run_cli({"series", "--p", "1.5", "--k-max", "40", "--assert"});
    REQUIRE(outside.exit_code == 0);
    REQUIRE(summary_value(outside.out, "inside_radius") == 0.0);
    REQUIRE(summary_value(outside.out, "error_growing") == 1.0);
}

TEST_CASE("written tables parse back as numbers", "[cli]") {
    REQUIRE(run_cli({"kernel", "--z-min", "0.5", "--z-max", "5", "--steps", "10", "--out",
                     "cli_test_k.tsv"})
                .exit_code == 0);
    const std::string text = slurp("cli_test_k.tsv");
    std::istringstream in(text);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream cells(line);
        double z = 0.0, k = 0.0;
        cells >> z >> k;
        REQUIRE(z >= 0.5);
        REQUIRE(z <= 5.0);
        REQUIRE(k < 0.0);
        ++rows;
    }
    REQUIRE(rows == 10);
    std::remove("cli_test_k.tsv");
}

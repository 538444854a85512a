#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qhatm/models.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out, err;
};

// Runs the built CLI binary with the given arguments, capturing both streams.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string base = "/tmp/qhatm_cli_test_" + std::to_string(counter++);
    std::string out_path = base + ".out", err_path = base + ".err";
    std::string cmd = std::string(QHATM_CLI_PATH) + " " + args + " > " + out_path +
                      " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    };
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

struct Csv {
    std::string schema;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# schema: ", 0) == 0) {
            csv.schema = line.substr(10);
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        csv.rows.push_back(std::move(cells));
    }
    return csv;
}

}  // namespace

TEST_CASE("help exits cleanly, missing subcommand does not") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("solve --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("solve emits the grid and honors t = 0") {
    RunResult r = run_cli("solve --t 0 --n-interior 17");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    CHECK(csv.schema == "t,x,u,v");
    REQUIRE(csv.rows.size() == 17);
    qhatm::ModelSpec m = qhatm::mb_model(0.005, 0.1, 10.0);
    for (const auto& row : csv.rows) {
        REQUIRE(row.size() == 4);
        double x = std::stod(row[1]);
        CHECK(std::abs(std::stod(row[2]) - static_cast<double>(m.u0(x))) <= 1e-13);
        CHECK(std::abs(std::stod(row[3]) - static_cast<double>(m.v0(x))) <= 1e-13);
    }
}

TEST_CASE("solve tracks the exact solution at the defaults") {
    RunResult r = run_cli("solve --t 0.1");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 257);
    qhatm::ModelSpec m = qhatm::mb_model(0.005, 0.1, 10.0);
    for (size_t i = 0; i < csv.rows.size(); i += 32) {
        double x = std::stod(csv.rows[i][1]);
        CHECK(std::abs(std::stod(csv.rows[i][2]) - m.exact_u(x, 0.1)) <= 1e-10);
        CHECK(std::abs(std::stod(csv.rows[i][3]) - m.exact_v(x, 0.1)) <= 1e-10);
    }
}

TEST_CASE("config validation surfaces as exit code 2") {
    RunResult r = run_cli("solve --n 0");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("n must be >= 1") != std::string::npos);

    CHECK(run_cli("solve --model nosuch").exit_code == 2);
    CHECK(run_cli("solve --model mb --a 2").exit_code == 2);  // wbk-only override
    CHECK(run_cli("table --preset table9").exit_code == 2);
    CHECK(run_cli("table --preset table1 --alpha 0.5").exit_code == 2);
    CHECK(run_cli("solve --config /tmp/definitely_missing_qhatm.json").exit_code == 2);
}

TEST_CASE("json config: unknown keys rejected, flags beat file values") {
    std::string good = "/tmp/qhatm_cfg_good.json";
    {
        std::ofstream f(good);
        f << R"({"model": "alw", "order": 2, "n_interior": 17})";
    }
    RunResult r = run_cli("solve --config " + good + " --t 0");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 17);
    qhatm::ModelSpec alw = qhatm::alw_model(0.005, 0.1, 10.0);
    double x = std::stod(csv.rows[8][1]);
    CHECK(std::abs(std::stod(csv.rows[8][2]) - static_cast<double>(alw.u0(x))) <= 1e-13);

    // flag wins over the file's n_interior
    RunResult r2 = run_cli("solve --config " + good + " --t 0 --n-interior 9");
    REQUIRE(r2.exit_code == 0);
    CHECK(parse_csv(r2.out).rows.size() == 9);

    std::string bad = "/tmp/qhatm_cfg_bad.json";
    {
        std::ofstream f(bad);
        f << R"({"model": "mb", "nplateau": 3})";
    }
    RunResult r3 = run_cli("solve --config " + bad);
    CHECK(r3.exit_code == 2);
    CHECK(r3.err.find("unknown key") != std::string::npos);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("table subcommand schema and row count") {
    RunResult r = run_cli("table --preset table1");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    CHECK(csv.schema ==
          "t,x,computed_abs_err_u,reference_qhatm,reference_adm,reference_vim,"
          "reference_cfrdtm");
    REQUIRE(csv.rows.size() == 15);
    for (const auto& row : csv.rows) CHECK(std::stod(row[2]) <= 1e-10);

    RunResult r3 = run_cli("table --preset table3");
    REQUIRE(r3.exit_code == 0);
    Csv c3 = parse_csv(r3.out);
    CHECK(c3.schema ==
          "t,x,computed_abs_err_u,reference_qhatm,reference_adm,reference_vim,"
          "reference_ladm,reference_cfrdtm");
    REQUIRE(c3.rows.size() == 15);
}

TEST_CASE("hcurve degenerate count and probe value") {
    RunResult r = run_cli("hcurve --hbar-min -1 --hbar-max -1 --count 1 --x 1 --t 0.01");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    CHECK(csv.schema == "hbar,u,v");
    REQUIRE(csv.rows.size() == 1);
    CHECK(std::stod(csv.rows[0][0]) == -1.0);
    qhatm::ModelSpec m = qhatm::mb_model(0.005, 0.1, 10.0);
    CHECK(std::abs(std::stod(csv.rows[0][1]) - m.exact_u(1.0, 0.01)) <= 1e-10);
}

TEST_CASE("alpha-sweep and residual and convergence schemas") {
    RunResult sweep = run_cli("alpha-sweep --alphas 1 --alphas 0.5 --count 3");
    REQUIRE(sweep.exit_code == 0);
    Csv cs = parse_csv(sweep.out);
    CHECK(cs.schema == "alpha,t,u,v");
    REQUIRE(cs.rows.size() == 6);

    RunResult resid = run_cli("residual --t 0.1 --n-interior 33");
    REQUIRE(resid.exit_code == 0);
    Csv cr = parse_csv(resid.out);
    CHECK(cr.schema == "x,r_u,r_v");
    CHECK(cr.rows.size() > 0);
    for (const auto& row : cr.rows) CHECK(std::abs(std::stod(row[1])) <= 1e-8);

    RunResult conv = run_cli("convergence");
    REQUIRE(conv.exit_code == 0);
    Csv cc = parse_csv(conv.out);
    CHECK(cc.schema == "i,rho_u,rho_v,tail_u,bound_u,tail_v,bound_v,applicable");
    REQUIRE(cc.rows.size() == 3);
    for (const auto& row : cc.rows) {
        CHECK(std::stod(row[1]) < 1.0);
        CHECK(std::stod(row[7]) == 1.0);
    }
}

TEST_CASE("file output matches stdout output byte for byte") {
    std::string path = "/tmp/qhatm_cli_out.csv";
    RunResult direct = run_cli("solve --t 0.2 --n-interior 33");
    REQUIRE(direct.exit_code == 0);
    RunResult to_file = run_cli("solve --t 0.2 --n-interior 33 --out " + path);
    REQUIRE(to_file.exit_code == 0);
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    CHECK(s.str() == direct.out);
    std::remove(path.c_str());

    // JSON mirror carries the same rows
    std::string jpath = "/tmp/qhatm_cli_out.json";
    RunResult with_json =
        run_cli("solve --t 0.2 --n-interior 9 --json-out " + jpath);
    REQUIRE(with_json.exit_code == 0);
    std::ifstream jf(jpath);
    std::ostringstream js;
    js << jf.rdbuf();
    CHECK(js.str().find("\"u\"") != std::string::npos);
    std::remove(jpath.c_str());
}

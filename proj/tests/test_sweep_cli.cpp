#include <doctest.h>

#include "hgate/errata.hpp"
#include "hgate/sweep.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace hgate;

namespace {

struct RunOut {
    int code;
    std::string out;
};

RunOut run_cmd(const std::string& args)
{
    const std::string cmd = std::string(HGATE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s)
{
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto nl = s.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(s.substr(pos));
            break;
        }
        lines.push_back(s.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("sweep spec validation")
{
    SweepSpec spec;
    spec.fixed = ModelParams{1.0, 0.5, 0.3};
    spec.t = 1.0;

    spec.axes = {{"banana", 0, 1, 3, false}};
    CHECK_THROWS_AS(spec.validate(), DomainError);

    spec.axes = {{"theta", 0.1, 1.0, 0, false}};
    CHECK_THROWS_AS(spec.validate(), DomainError);

    spec.axes = {{"omega1", 0.0, 1.0, 5, true}};
    CHECK_THROWS_AS(spec.validate(), DomainError); // log spacing needs positive range

    spec.axes = {{"theta", 0.1, 1.0, 5, false}, {"theta", 0.1, 1.0, 5, false}};
    CHECK_THROWS_AS(spec.validate(), DomainError);

    spec.axes = {{"theta", 0.1, 1.0, 5, false}, {"t", 1.0, 2.0, 7, false}};
    CHECK_NOTHROW(spec.validate());
    CHECK(spec.grid_size() == 35);

    spec.grid_cap = 10;
    CHECK_THROWS_AS(spec.validate(), DomainError);
}

TEST_CASE("sweep: declared order, determinism, and the degenerate grid")
{
    SweepSpec spec;
    spec.fixed = ModelParams{1.0, 0.5, 0.3};
    spec.t = 1.0;
    spec.axes = {{"theta", 0.1, 1.5, 15, false}};

    std::vector<RunRecord> rows;
    run_sweep(spec, [&](std::size_t i, const RunRecord& r) {
        CHECK(i == rows.size()); // strictly ascending emission
        rows.push_back(r);
    });
    REQUIRE(rows.size() == 15);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].params.theta > rows[i - 1].params.theta); // monotone axis
    CHECK(rows.front().params.theta == doctest::Approx(0.1));
    CHECK(rows.back().params.theta == doctest::Approx(1.5));

    // same grid again, forced single-threaded: byte-identical CSV
    SweepSpec spec1 = spec;
    spec1.threads = 1;
    std::string csv_a, csv_b;
    run_sweep(spec, [&](std::size_t, const RunRecord& r) { csv_a += csv_row(r); });
    run_sweep(spec1, [&](std::size_t, const RunRecord& r) { csv_b += csv_row(r); });
    CHECK(csv_a == csv_b);

    // no axes: a single row at the fixed parameters
    SweepSpec fixed_only;
    fixed_only.fixed = ModelParams{1.0, 0.5, 0.3};
    fixed_only.t = 2.0;
    std::size_t count = 0;
    run_sweep(fixed_only, [&](std::size_t, const RunRecord& r) {
        ++count;
        CHECK(r.t == 2.0);
    });
    CHECK(count == 1);
}

TEST_CASE("sweep records carry the per-point report")
{
    const RunRecord r = evaluate_point(ModelParams{1.0, 1.0, M_PI / 4}, 2.0 * M_PI, true, 0.01, false);
    CHECK(r.fidelity >= 1.0 - 1e-6);
    CHECK(r.fidelity_ok);
    CHECK(r.a_tr_norm > 0.0);
    CHECK(std::abs(r.h_d[0]) < 10.0);

    const std::string csv = csv_row(r);
    CHECK(csv == csv_row(r)); // deterministic serialization

    const nlohmann::json j = nlohmann::json::parse(json_row(r));
    CHECK(j["schema"] == "hgate.sweep/1");
    CHECK(j["fidelity_ok"] == true);
    CHECK(j["h_d"].size() == 4);
}

TEST_CASE("format_double round-trips")
{
    for (double v : {0.0, 1.0, -1.5, M_PI, 0.1, 1e-300, 3.0000000000000004}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("cli: gate json")
{
    const RunOut r = run_cmd("gate --omega0 1 --omega1 0.5 --theta 0.5235988 --t 12.566371 --json");
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "hgate.gate/1");
    REQUIRE(j["u_gate"].size() == 4);
    REQUIRE(j["u_gate"][0].size() == 4);
    CHECK(j["u_gate"][0][0].size() == 2); // [re, im] pairs
    double colnorm = 0.0;
    for (int row = 0; row < 4; ++row) {
        const double re = j["u_gate"][row][0][0].get<double>();
        const double im = j["u_gate"][row][0][1].get<double>();
        colnorm += re * re + im * im;
    }
    CHECK(colnorm == doctest::Approx(1.0)); // unitary column
}

TEST_CASE("cli: static field gives a diagonal gate")
{
    const RunOut r = run_cmd("gate --omega0 1 --omega1 0 --theta 0.3 --t 1 --json");
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    double offdiag = 0.0;
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col)
            if (row != col)
                offdiag += std::abs(j["u_gate"][row][col][0].get<double>()) +
                           std::abs(j["u_gate"][row][col][1].get<double>());
    CHECK(offdiag < 1e-10);
}

TEST_CASE("cli: validation failures exit 2 and name the offender")
{
    CHECK(run_cmd("gate --omega0 1 --omega1 1 --theta 1.5707963 --t 1").code == 2);
    CHECK(run_cmd("gate --omega0 0 --omega1 1 --theta 0.3 --t 1").code == 2);
    CHECK(run_cmd("gate --omega0 1 --t 1 --theta 0.2 --theta-deg 10").code == 2); // mutually exclusive
    CHECK(run_cmd("gate").code == 2);                                             // --t required
    CHECK(run_cmd("sweep --axis nope:0:1:5 --t 1").code == 2);
    CHECK(run_cmd("frobnicate").code == 2);
}

TEST_CASE("cli: theta-deg converts")
{
    const RunOut a = run_cmd("gate --omega0 1 --omega1 0.5 --theta-deg 30 --t 2 --json");
    const RunOut b = run_cmd("gate --omega0 1 --omega1 0.5 --theta 0.5235987755982988 --t 2 --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli: sweep csv shape and rerun determinism")
{
    const std::string cmd = "sweep --omega0 1 --omega1 0.5 --t 1 --axis theta:0.1:1.5:15";
    const RunOut a = run_cmd(cmd);
    CHECK(a.code == 0);
    const auto ls = lines_of(a.out);
    REQUIRE(ls.size() >= 17);
    CHECK(ls[0].rfind("# schema hgate.sweep/1", 0) == 0);
    CHECK(ls[1].rfind("omega0,omega1,theta,t,hd_0", 0) == 0);
    CHECK(ls.size() == 17); // comment + header + 15 rows

    const RunOut b = run_cmd(cmd);
    CHECK(a.out == b.out); // byte-identical reruns

    const RunOut j = run_cmd(cmd + " --json");
    CHECK(j.code == 0);
    const auto jls = lines_of(j.out);
    CHECK(jls.size() == 15);
    CHECK(nlohmann::json::parse(jls[0])["theta"].get<double>() == doctest::Approx(0.1));
}

TEST_CASE("cli: config file mirrors flags and flags win")
{
    const std::string cfg_path = "/tmp/hgate_test_cfg.ini";
    {
        std::ofstream f(cfg_path);
        f << "[gate]\nomega0 = 2.0\nomega1 = 0.5\ntheta = 0.4\nt = 1.0\n";
    }
    const RunOut from_cfg = run_cmd("--config " + cfg_path + " gate --json");
    CHECK(from_cfg.code == 0);
    const RunOut from_flags = run_cmd("gate --omega0 2 --omega1 0.5 --theta 0.4 --t 1 --json");
    CHECK(from_cfg.out == from_flags.out);

    // command line beats the file
    const RunOut overridden = run_cmd("--config " + cfg_path + " gate --omega0 3 --json");
    const RunOut direct = run_cmd("gate --omega0 3 --omega1 0.5 --theta 0.4 --t 1 --json");
    CHECK(overridden.out == direct.out);
    std::remove(cfg_path.c_str());
}

TEST_CASE("cli: errata report is deterministic with the fixed content")
{
    const RunOut a = run_cmd("errata");
    const RunOut b = run_cmd("errata");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    for (const char* id : {"[E1]", "[E2]", "[E3]", "[E4]", "[E5]"})
        CHECK(a.out.find(id) != std::string::npos);
    CHECK(a.out.find("[E6]") == std::string::npos);
    CHECK(a.out.find("Literal vs derived connection coefficients") != std::string::npos);
    CHECK(errata_entries().size() == 5);
}

TEST_CASE("cli: verify quick is deterministic, passes, and honors --tol")
{
    const RunOut a = run_cmd("verify --quick --seed 42");
    CHECK(a.code == 0);
    CHECK(a.out.find("FAIL") == std::string::npos);
    const RunOut b = run_cmd("verify --quick --seed 42");
    CHECK(a.out == b.out);

    const RunOut strict = run_cmd("verify --quick --seed 42 --tol 1e-20");
    CHECK(strict.code == 1);
    CHECK(strict.out.find("FAIL") != std::string::npos);
}

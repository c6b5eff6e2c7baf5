#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bolab/errors.hpp"
#include "bolab/expression.hpp"
#include "bolab/reports.hpp"
#include "bolab/run_config.hpp"
#include "bolab/snapshot.hpp"
#include "test_helpers.hpp"

using namespace bolab;
using namespace bolab::test;

TEST_SUITE_BEGIN("config_io");

static const char* kIlwConfig =
    "# sample run\n"
    "model = ilw\n"
    "delta = 0.5\n"
    "grid.n = 256\n"
    "grid.length = 100  # trailing comment\n"
    "time.dt = 1e-3\n"
    "time.t_final = 0.25\n"
    "time.stride = 10\n"
    "ic.kind = gaussian\n"
    "ic.params = 1, 0, 2\n"
    "out.dir = runs/ilw_a\n";

TEST_CASE("a complete config parses into the right pieces") {
    RunConfig cfg = parse_config(kIlwConfig);
    REQUIRE(cfg.model.has_value());
    CHECK(*cfg.model == Model::ILW);
    REQUIRE(cfg.delta.has_value());
    CHECK(*cfg.delta == 0.5);
    CHECK(cfg.grid_n == 256);
    CHECK(cfg.grid_length == 100.0);
    CHECK(cfg.dt == 1e-3);
    CHECK(cfg.t_final == 0.25);
    CHECK(cfg.stride == 10);
    CHECK(cfg.ic.kind == IcKind::Gaussian);
    CHECK(cfg.out_dir == "runs/ilw_a");

    TorusGrid g = grid_of(cfg);
    CHECK(g.size() == 256);
    EquationSpec spec = equation_of(cfg);
    CHECK(spec.model() == Model::ILW);
    CHECK(spec.delta() == 0.5);
    IntegratorConfig icfg = integrator_of(cfg);
    CHECK(icfg.dt == 1e-3);
    CHECK(icfg.snapshot_stride == 10);
    Field u0 = initial_field(cfg);
    CHECK(u0.sup_norm() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("parse-print-parse is the identity") {
    RunConfig a = parse_config(kIlwConfig);
    std::string printed = print_config(a);
    RunConfig b = parse_config(printed);
    CHECK(print_config(b) == printed);
    CHECK(b.grid_n == a.grid_n);
    CHECK(b.dt == a.dt);
    CHECK(b.out_dir == a.out_dir);
    REQUIRE(b.delta.has_value());
    CHECK(*b.delta == *a.delta);
}

TEST_CASE("line-numbered rejection of malformed input") {
    CHECK_THROWS_WITH_AS(parse_config("model = bo\ngrid.n 256\n"),
                         doctest::Contains("line 2"), ConfigError);
    // the config is otherwise complete, so the stray key is the one defect
    CHECK_THROWS_WITH_AS(parse_config("model = bo\ngrid.n = 64\ngrid.length = 10\n"
                                      "ic.kind = zero\nbogus.key = 1\n"),
                         doctest::Contains("unknown key"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("model = bo\ngrid.n = 64\ngrid.n = 128\n"),
        doctest::Contains("duplicate key 'grid.n' (first on line 2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("model = tsunami\n"),
                         doctest::Contains("unknown model"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("model = bo\ngrid.n = 1001\ngrid.length = 10\n"
                                      "ic.kind = zero\n"),
                         doctest::Contains("even"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("model = ilw\ngrid.n = 64\ngrid.length = 10\n"
                                      "ic.kind = zero\n"),
                         doctest::Contains("ilw requires delta"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("grid.n = 64\n"),
                         doctest::Contains("missing required key"), ConfigError);
}

TEST_CASE("keys are tied to their models") {
    const char* base = "grid.n = 64\ngrid.length = 10\nic.kind = zero\n";
    CHECK_THROWS_WITH_AS(parse_config(std::string("model = bo\nk = 3\n") + base),
                         doctest::Contains("only meaningful for model = gbo"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(std::string("model = bo\ndelta = 1\n") + base),
                         doctest::Contains("only meaningful for model = ilw"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(std::string("model = kdv\nj = 1\n") + base),
                         doctest::Contains("only meaningful for model = general_linear"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(std::string("model = bo\nb = 1\n") + base),
                         doctest::Contains("only meaningful for model = general_linear"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(std::string("model = general_linear\nj = 1\n") + base),
        doctest::Contains("general_linear requires b"), ConfigError);
}

TEST_CASE("ic parameters are validated at parse time") {
    const char* head = "model = bo\ngrid.n = 64\ngrid.length = 10\n";
    CHECK_THROWS_WITH_AS(
        parse_config(std::string(head) + "ic.kind = gaussian\nic.params = 1, 0\n"),
        doctest::Contains("ic.params"), ConfigError);
    // soliton slower than the periodic minimum speed
    CHECK_THROWS_WITH_AS(
        parse_config(std::string(head) + "ic.kind = soliton\nic.params = 0.1, 0\n"),
        doctest::Contains("speed"), ConfigError);
    CHECK_NOTHROW(
        parse_config(std::string(head) + "ic.kind = soliton\nic.params = 1, 0\n"));
    CHECK_NOTHROW(parse_config(std::string(head) +
                               "ic.kind = modes\nic.params = 1, 0.5, 0, 3, 0.1, 1.5\n"));
    CHECK_THROWS_WITH_AS(
        parse_config(std::string(head) + "ic.kind = modes\nic.params = 1, 0.5\n"),
        doctest::Contains("ic.params"), ConfigError);
}

TEST_CASE("general-linear expressions are compiled while parsing") {
    const char* head = "model = general_linear\ngrid.n = 64\ngrid.length = 10\n"
                       "ic.kind = zero\n";
    CHECK_NOTHROW(parse_config(std::string(head) + "j = 2\nb = 1 + 0.5*sin(2*pi*x/10)\n"
                                                   "a0 = t*t\n"));
    CHECK_THROWS_WITH_AS(
        parse_config(std::string(head) + "j = 2\nb = 1 + sin(\n"),
        doctest::Contains("expression error"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(std::string(head) + "j = 2\nb = 1\na2 = y + 1\n"),
        doctest::Contains("expression error"), ConfigError);
}

TEST_CASE("expression compiler: values and error positions") {
    auto f = compile_expression("0.5*sin(pi*x) + t");
    CHECK(f(0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(f(0.0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f(1.5, 1.0) == doctest::Approx(0.5 * std::sin(1.5 * M_PI) + 1.0).epsilon(1e-13));

    auto g = compile_expression("-exp(-x*x)/(1 + t)");
    CHECK(g(0.0, 0.0) == doctest::Approx(-1.0));
    CHECK(g(0.0, 1.0) == doctest::Approx(-0.5));

    auto h = compile_expression("cos(2*pi*t)*(x - 1)");
    CHECK(h(3.0, 1.0) == doctest::Approx(2.0).epsilon(1e-13));

    CHECK_THROWS_WITH_AS(compile_expression("1 + * 2"),
                         doctest::Contains("expression error at position"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(compile_expression("sin(x"), doctest::Contains("position"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(compile_expression("bogus(x)"), doctest::Contains("position"),
                         ValidationError);
    CHECK_THROWS_AS(compile_expression(""), ValidationError);
}

TEST_CASE("snapshot bytes round trip bit-exactly") {
    TorusGrid g(64, 12.5);
    Field u = random_samples(g, 130);
    SimState s{u, 0.625};
    auto bytes = snapshot_bytes(s);
    CHECK(bytes.size() == 4 + 4 + 8 + 8 + 8 + 64 * 8);
    SimState back = snapshot_from_bytes(bytes);
    CHECK(back.t == s.t);
    CHECK(back.u.grid() == g);
    for (int j = 0; j < g.size(); ++j) CHECK(back.u[j] == u[j]); // bitwise
}

TEST_CASE("snapshot parsing failures are distinct") {
    TorusGrid g(64, 12.5);
    SimState s{Field::zero(g), 0.0};
    auto good = snapshot_bytes(s);

    auto bad_magic = good;
    bad_magic[0] = 'X';
    CHECK_THROWS_WITH_AS(snapshot_from_bytes(bad_magic),
                         doctest::Contains("not a snapshot"), ValidationError);

    auto bad_version = good;
    bad_version[4] = 9;
    CHECK_THROWS_WITH_AS(snapshot_from_bytes(bad_version),
                         doctest::Contains("unsupported snapshot version"),
                         ValidationError);

    auto short_data = good;
    short_data.resize(short_data.size() - 5);
    CHECK_THROWS_WITH_AS(snapshot_from_bytes(short_data),
                         doctest::Contains("truncated"), ValidationError);

    std::vector<std::uint8_t> tiny(7, 0);
    CHECK_THROWS_AS(snapshot_from_bytes(tiny), ValidationError);
}

TEST_CASE("snapshot files survive the disk") {
    TorusGrid g(32, 5.0);
    Field u = random_samples(g, 131);
    SimState s{u, 1.75};
    const std::string path = "roundtrip_test.bofs";
    write_snapshot(path, s);
    SimState back = read_snapshot(path);
    CHECK(back.t == s.t);
    for (int j = 0; j < g.size(); ++j) CHECK(back.u[j] == u[j]);
    std::remove(path.c_str());
    CHECK_THROWS_WITH_AS(read_snapshot(path), doctest::Contains(path.c_str()),
                         ValidationError);
}

TEST_CASE("diagnostics csv: exact header, hamiltonian blank when absent") {
    TorusGrid g(64, 10.0);
    Field u0 = Field::sampled(g, [&](double x) {
        return 0.1 * std::cos(2.0 * M_PI * x / g.length());
    });
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 2e-3;

    Trajectory bo = run(u0, EquationSpec::bo(), cfg);
    std::string csv = diagnostics_csv(bo);
    CHECK(csv.rfind("t,mass,l2,hamiltonian,hs_half,tail_fraction,sup_norm\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4); // header + 3 rows
    CHECK(csv.find(",,") == std::string::npos);           // hamiltonian present

    Trajectory kdv = run(u0, EquationSpec::kdv(), cfg);
    std::string csv2 = diagnostics_csv(kdv);
    // row format: t,mass,l2,<empty>,hs,...
    CHECK(csv2.find(",,") != std::string::npos);
}

TEST_CASE("manifest json round trips the config") {
    RunConfig cfg = parse_config(kIlwConfig);
    std::string doc = manifest_json(cfg);
    CHECK(doc.find("bolab-manifest") != std::string::npos);
    RunConfig back = config_from_manifest(doc);
    CHECK(print_config(back) == print_config(cfg));
    CHECK_THROWS_AS(config_from_manifest("{\"format\": \"something-else\"}"),
                    ValidationError);
    CHECK_THROWS_AS(config_from_manifest("not json at all"), ValidationError);
}

TEST_SUITE_END();

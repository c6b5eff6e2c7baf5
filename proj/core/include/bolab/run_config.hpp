#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bolab/equation.hpp"
#include "bolab/initial_conditions.hpp"
#include "bolab/integrator.hpp"

namespace bolab {

// Parsed form of the flat `key = value` run-configuration format. Everything
// is validated at parse time with line-numbered errors; unknown keys are
// rejected so typos never silently fall back to defaults. The model is
// optional here because probe-only configs never need one — driver entry
// points that do need it (equation_of) complain when it is absent.
struct RunConfig {
    std::optional<Model> model;
    int power = 2;                       // gbo only (key: k)
    std::optional<double> delta;         // ilw only
    int hilbert_order = 0;               // general_linear only (key: j)
    std::array<std::optional<std::string>, 5> a_expr;   // keys a0..a4
    std::optional<std::string> b_expr;   // required for general_linear

    int grid_n = 0;                      // required, even, >= 8
    double grid_length = 0.0;            // required, > 0

    double dt = 1e-3;
    double t_final = 1.0;
    int stride = 1;

    InitialCondition ic;                 // ic.kind required
    std::string out_dir = "out";

    std::vector<double> limit_deltas;    // key limits.deltas (sweep order)

    std::optional<std::string> probe_kind;     // "uc" or "vanishing"
    double probe_a = 0.0, probe_b = 0.0;       // uc interval
    std::optional<std::string> probe_partner;  // "hilbert" or "ilw_dx"
    double probe_delta = 1.0;                  // partner depth for ilw_dx
    double probe_x0 = 0.0;                     // vanishing-order center
    std::vector<double> probe_radii;           // vanishing-order radii
};

// Parse the text of a config file. Throws ConfigError (with 1-based line
// numbers) on malformed lines, unknown or duplicate keys, type mismatches,
// and every per-key validity rule the downstream modules would enforce.
RunConfig parse_config(const std::string& text);

// Canonical text form; parse(print(parse(s))) reproduces parse(s) exactly.
std::string print_config(const RunConfig& cfg);

// Assemble the downstream objects. equation_of requires a model (and compiles
// the general-linear coefficient expressions); the others work for any config.
TorusGrid grid_of(const RunConfig& cfg);
EquationSpec equation_of(const RunConfig& cfg);
IntegratorConfig integrator_of(const RunConfig& cfg);
Field initial_field(const RunConfig& cfg);

} // namespace bolab

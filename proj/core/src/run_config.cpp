#include "bolab/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "bolab/errors.hpp"
#include "bolab/expression.hpp"

namespace bolab {

namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const Entry& e) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw ConfigError("key '" + key + "': expected a finite number, got '" +
                              e.value + "'",
                          e.line);
    return v;
}

long parse_int(const std::string& key, const Entry& e) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw ConfigError("key '" + key + "': expected an integer, got '" + e.value + "'",
                          e.line);
    return v;
}

std::vector<double> parse_list(const std::string& key, const Entry& e) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("key '" + key + "': empty element in list", e.line);
        Entry sub{item, e.line, false};
        out.push_back(parse_double(key, sub));
    }
    if (out.empty()) throw ConfigError("key '" + key + "': expected a list", e.line);
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt(v[i]);
    }
    return out;
}

const char* model_name(Model m) {
    switch (m) {
        case Model::BO: return "bo";
        case Model::GBO: return "gbo";
        case Model::BH: return "bh";
        case Model::ILW: return "ilw";
        case Model::KDV: return "kdv";
        case Model::GeneralLinear: return "general_linear";
    }
    return "?";
}

const char* ic_name(IcKind k) {
    switch (k) {
        case IcKind::Gaussian: return "gaussian";
        case IcKind::Bump: return "bump";
        case IcKind::Soliton: return "soliton";
        case IcKind::Modes: return "modes";
        case IcKind::Zero: return "zero";
    }
    return "?";
}

} // namespace

RunConfig parse_config(const std::string& text) {
    std::map<std::string, Entry> entries;
    {
        std::stringstream ss(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(ss, raw)) {
            ++lineno;
            const std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            const std::string line = trim(raw);
            if (line.empty()) continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("expected 'key = value'", lineno);
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) throw ConfigError("missing key before '='", lineno);
            if (value.empty())
                throw ConfigError("key '" + key + "': missing value", lineno);
            auto [it, inserted] = entries.emplace(key, Entry{value, lineno, false});
            if (!inserted)
                throw ConfigError("duplicate key '" + key + "' (first on line " +
                                      std::to_string(it->second.line) + ")",
                                  lineno);
        }
    }

    auto take = [&](const char* key) -> Entry* {
        auto it = entries.find(key);
        if (it == entries.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    };
    auto require = [&](const char* key) -> Entry& {
        Entry* e = take(key);
        if (!e) throw ConfigError(std::string("missing required key '") + key + "'");
        return *e;
    };

    RunConfig cfg;
    int model_line = 0;

    if (Entry* e = take("model")) {
        model_line = e->line;
        const std::string& v = e->value;
        if (v == "bo") cfg.model = Model::BO;
        else if (v == "gbo") cfg.model = Model::GBO;
        else if (v == "bh") cfg.model = Model::BH;
        else if (v == "ilw") cfg.model = Model::ILW;
        else if (v == "kdv") cfg.model = Model::KDV;
        else if (v == "general_linear") cfg.model = Model::GeneralLinear;
        else
            throw ConfigError("key 'model': unknown model '" + v +
                                  "' (bo, gbo, bh, ilw, kdv, general_linear)",
                              e->line);
    }

    if (Entry* e = take("k")) {
        if (cfg.model != Model::GBO)
            throw ConfigError("key 'k' is only meaningful for model = gbo", e->line);
        const long k = parse_int("k", *e);
        if (k < 2 || k > 8)
            throw ConfigError("key 'k': power must lie in [2, 8]", e->line);
        cfg.power = static_cast<int>(k);
    }

    if (Entry* e = take("delta")) {
        if (cfg.model != Model::ILW)
            throw ConfigError("key 'delta' is only meaningful for model = ilw", e->line);
        const double d = parse_double("delta", *e);
        if (!(d > 0.0))
            throw ConfigError("key 'delta': depth must be positive", e->line);
        cfg.delta = d;
    }
    if (cfg.model == Model::ILW && !cfg.delta)
        throw ConfigError("ilw requires delta", model_line);

    if (Entry* e = take("j")) {
        if (cfg.model != Model::GeneralLinear)
            throw ConfigError("key 'j' is only meaningful for model = general_linear",
                              e->line);
        const long j = parse_int("j", *e);
        if (j < 0 || j > 4)
            throw ConfigError("key 'j': order must lie in [0, 4]", e->line);
        cfg.hilbert_order = static_cast<int>(j);
    }

    for (int m = 0; m <= 4; ++m) {
        const std::string key = "a" + std::to_string(m);
        if (Entry* e = take(key.c_str())) {
            if (cfg.model != Model::GeneralLinear)
                throw ConfigError("key '" + key +
                                      "' is only meaningful for model = general_linear",
                                  e->line);
            try {
                compile_expression(e->value);
            } catch (const ValidationError& err) {
                throw ConfigError("key '" + key + "': " + err.what(), e->line);
            }
            cfg.a_expr[m] = e->value;
        }
    }
    if (Entry* e = take("b")) {
        if (cfg.model != Model::GeneralLinear)
            throw ConfigError("key 'b' is only meaningful for model = general_linear",
                              e->line);
        try {
            compile_expression(e->value);
        } catch (const ValidationError& err) {
            throw ConfigError(std::string("key 'b': ") + err.what(), e->line);
        }
        cfg.b_expr = e->value;
    }
    if (cfg.model == Model::GeneralLinear && !cfg.b_expr)
        throw ConfigError("general_linear requires b", model_line);

    {
        Entry& e = require("grid.n");
        const long n = parse_int("grid.n", e);
        if (n < 8 || n % 2 != 0)
            throw ConfigError("key 'grid.n': grid size must be even and at least 8",
                              e.line);
        cfg.grid_n = static_cast<int>(n);
    }
    {
        Entry& e = require("grid.length");
        const double L = parse_double("grid.length", e);
        if (!(L > 0.0))
            throw ConfigError("key 'grid.length': period must be positive", e.line);
        cfg.grid_length = L;
    }

    if (Entry* e = take("time.dt")) {
        cfg.dt = parse_double("time.dt", *e);
        if (!(cfg.dt > 0.0))
            throw ConfigError("key 'time.dt': step must be positive", e->line);
    }
    if (Entry* e = take("time.t_final")) {
        cfg.t_final = parse_double("time.t_final", *e);
        if (!(cfg.t_final >= 0.0))
            throw ConfigError("key 'time.t_final': horizon must be nonnegative", e->line);
    }
    if (Entry* e = take("time.stride")) {
        const long s = parse_int("time.stride", *e);
        if (s < 1)
            throw ConfigError("key 'time.stride': stride must be a positive integer",
                              e->line);
        cfg.stride = static_cast<int>(s);
    }

    {
        Entry& e = require("ic.kind");
        const std::string& v = e.value;
        if (v == "gaussian") cfg.ic.kind = IcKind::Gaussian;
        else if (v == "bump") cfg.ic.kind = IcKind::Bump;
        else if (v == "soliton") cfg.ic.kind = IcKind::Soliton;
        else if (v == "modes") cfg.ic.kind = IcKind::Modes;
        else if (v == "zero") cfg.ic.kind = IcKind::Zero;
        else
            throw ConfigError("key 'ic.kind': unknown kind '" + v +
                                  "' (gaussian, bump, soliton, modes, zero)",
                              e.line);
    }
    int ic_params_line = 0;
    if (Entry* e = take("ic.params")) {
        ic_params_line = e->line;
        cfg.ic.params = parse_list("ic.params", *e);
    }

    if (Entry* e = take("out.dir")) cfg.out_dir = e->value;

    if (Entry* e = take("limits.deltas")) {
        cfg.limit_deltas = parse_list("limits.deltas", *e);
        for (double d : cfg.limit_deltas)
            if (!(d > 0.0))
                throw ConfigError("key 'limits.deltas': depths must be positive",
                                  e->line);
    }

    if (Entry* e = take("probe.kind")) {
        if (e->value != "uc" && e->value != "vanishing")
            throw ConfigError("key 'probe.kind': expected 'uc' or 'vanishing'", e->line);
        cfg.probe_kind = e->value;
    }
    if (Entry* e = take("probe.a")) cfg.probe_a = parse_double("probe.a", *e);
    if (Entry* e = take("probe.b")) cfg.probe_b = parse_double("probe.b", *e);
    if (Entry* e = take("probe.partner")) {
        if (e->value != "hilbert" && e->value != "ilw_dx")
            throw ConfigError("key 'probe.partner': expected 'hilbert' or 'ilw_dx'",
                              e->line);
        cfg.probe_partner = e->value;
    }
    if (Entry* e = take("probe.delta")) {
        cfg.probe_delta = parse_double("probe.delta", *e);
        if (!(cfg.probe_delta > 0.0))
            throw ConfigError("key 'probe.delta': depth must be positive", e->line);
    }
    if (Entry* e = take("probe.x0")) cfg.probe_x0 = parse_double("probe.x0", *e);
    if (Entry* e = take("probe.radii")) cfg.probe_radii = parse_list("probe.radii", *e);

    for (const auto& [key, entry] : entries)
        if (!entry.used)
            throw ConfigError("unknown key '" + key + "'", entry.line);

    // Realize the initial condition once so bad parameters are caught here,
    // with the config's line numbers, rather than deep inside a run.
    try {
        realize(cfg.ic, grid_of(cfg));
    } catch (const ValidationError& err) {
        throw ConfigError(std::string("ic.params: ") + err.what(), ic_params_line);
    }

    return cfg;
}

std::string print_config(const RunConfig& cfg) {
    std::ostringstream os;
    if (cfg.model) {
        os << "model = " << model_name(*cfg.model) << "\n";
        if (*cfg.model == Model::GBO) os << "k = " << cfg.power << "\n";
        if (*cfg.model == Model::ILW && cfg.delta)
            os << "delta = " << fmt(*cfg.delta) << "\n";
        if (*cfg.model == Model::GeneralLinear) {
            os << "j = " << cfg.hilbert_order << "\n";
            for (int m = 0; m <= 4; ++m)
                if (cfg.a_expr[m])
                    os << "a" << m << " = " << *cfg.a_expr[m] << "\n";
            if (cfg.b_expr) os << "b = " << *cfg.b_expr << "\n";
        }
    }
    os << "grid.n = " << cfg.grid_n << "\n";
    os << "grid.length = " << fmt(cfg.grid_length) << "\n";
    os << "time.dt = " << fmt(cfg.dt) << "\n";
    os << "time.t_final = " << fmt(cfg.t_final) << "\n";
    os << "time.stride = " << cfg.stride << "\n";
    os << "ic.kind = " << ic_name(cfg.ic.kind) << "\n";
    if (!cfg.ic.params.empty()) os << "ic.params = " << fmt_list(cfg.ic.params) << "\n";
    os << "out.dir = " << cfg.out_dir << "\n";
    if (!cfg.limit_deltas.empty())
        os << "limits.deltas = " << fmt_list(cfg.limit_deltas) << "\n";
    if (cfg.probe_kind) {
        os << "probe.kind = " << *cfg.probe_kind << "\n";
        if (*cfg.probe_kind == "uc") {
            os << "probe.a = " << fmt(cfg.probe_a) << "\n";
            os << "probe.b = " << fmt(cfg.probe_b) << "\n";
            if (cfg.probe_partner) os << "probe.partner = " << *cfg.probe_partner << "\n";
            if (cfg.probe_partner && *cfg.probe_partner == "ilw_dx")
                os << "probe.delta = " << fmt(cfg.probe_delta) << "\n";
        } else {
            os << "probe.x0 = " << fmt(cfg.probe_x0) << "\n";
            if (!cfg.probe_radii.empty())
                os << "probe.radii = " << fmt_list(cfg.probe_radii) << "\n";
        }
    }
    return os.str();
}

TorusGrid grid_of(const RunConfig& cfg) { return TorusGrid(cfg.grid_n, cfg.grid_length); }

EquationSpec equation_of(const RunConfig& cfg) {
    if (!cfg.model) throw ConfigError("missing required key 'model'");
    switch (*cfg.model) {
        case Model::BO: return EquationSpec::bo();
        case Model::GBO: return EquationSpec::gbo(cfg.power);
        case Model::BH: return EquationSpec::bh();
        case Model::ILW: return EquationSpec::ilw(*cfg.delta);
        case Model::KDV: return EquationSpec::kdv();
        case Model::GeneralLinear: {
            GeneralLinearTerms terms;
            terms.hilbert_order = cfg.hilbert_order;
            for (int m = 0; m <= 4; ++m)
                if (cfg.a_expr[m])
                    terms.a.push_back(compile_expression(*cfg.a_expr[m]));
                else
                    terms.a.push_back(nullptr);
            terms.b = compile_expression(*cfg.b_expr);
            return EquationSpec::general_linear(std::move(terms));
        }
    }
    throw ConfigError("missing required key 'model'");
}

IntegratorConfig integrator_of(const RunConfig& cfg) {
    IntegratorConfig ic;
    ic.dt = cfg.dt;
    ic.t_final = cfg.t_final;
    ic.snapshot_stride = cfg.stride;
    return ic;
}

Field initial_field(const RunConfig& cfg) { return realize(cfg.ic, grid_of(cfg)); }

} // namespace bolab

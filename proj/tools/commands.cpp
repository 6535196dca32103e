#include "commands.hpp"

#include "duffing/classical.hpp"
#include "duffing/errors.hpp"
#include "duffing/io.hpp"
#include "duffing/metastable.hpp"
#include "duffing/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <variant>

namespace duffing::cli {

using nlohmann::json;

namespace {

// ---- config helpers ------------------------------------------------------------------

std::size_t line_at(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// Line of the last component of a key path, searching each component after its parent.
std::size_t line_of(const std::string& text, const std::vector<std::string>& path) {
    std::size_t pos = 0;
    for (const auto& key : path) {
        const std::string quoted = "\"" + key + "\"";
        std::size_t at = pos;
        while (true) {
            at = text.find(quoted, at);
            if (at == std::string::npos) {
                return line_at(text, pos);
            }
            std::size_t k = at + quoted.size();
            while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
                ++k;
            }
            if (k < text.size() && text[k] == ':') {
                break;
            }
            at += quoted.size();
        }
        pos = at;
    }
    return line_at(text, pos);
}

std::string join(const std::vector<std::string>& path) {
    std::string s;
    for (const auto& p : path) {
        s += s.empty() ? p : "." + p;
    }
    return s;
}

struct Ctx {
    const std::string& text;

    [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& msg) const {
        throw Error(ErrorKind::ConfigError, "line " + std::to_string(line_of(text, path)) + ": " +
                                                (path.empty() ? "" : "'" + join(path) + "' ") + msg);
    }

    void only_keys(const json& obj, const std::vector<std::string>& path, const std::set<std::string>& allowed) const {
        if (!obj.is_object()) {
            fail(path, "must be an object");
        }
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (!allowed.count(it.key())) {
                auto p = path;
                p.push_back(it.key());
                fail(p, "unknown key");
            }
        }
    }

    double number(const json& obj, const std::vector<std::string>& path, const std::string& key) const {
        auto p = path;
        p.push_back(key);
        if (!obj.contains(key)) {
            fail(path, "missing required key '" + key + "'");
        }
        const auto& v = obj.at(key);
        if (!v.is_number()) {
            fail(p, "must be a number");
        }
        const double x = v.get<double>();
        if (!std::isfinite(x)) {
            fail(p, "must be finite");
        }
        return x;
    }

    std::optional<double> opt_number(const json& obj, const std::vector<std::string>& path,
                                     const std::string& key) const {
        if (!obj.contains(key)) {
            return std::nullopt;
        }
        return number(obj, path, key);
    }

    std::size_t count(const json& v, const std::vector<std::string>& path, std::size_t min) const {
        if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min)) {
            fail(path, "must be an integer >= " + std::to_string(min));
        }
        return static_cast<std::size_t>(v.get<long long>());
    }

    // [values...] | {"start","stop","num"} | {"start","stop","step"}
    std::vector<double> grid(const json& v, const std::vector<std::string>& path) const {
        std::vector<double> out;
        if (v.is_array()) {
            for (const auto& x : v) {
                if (!x.is_number() || !std::isfinite(x.get<double>())) {
                    fail(path, "grid values must be finite numbers");
                }
                out.push_back(x.get<double>());
            }
        } else if (v.is_object()) {
            only_keys(v, path, {"start", "stop", "num", "step"});
            const double a = number(v, path, "start");
            const double b = number(v, path, "stop");
            if (v.contains("num") == v.contains("step")) {
                fail(path, "needs exactly one of 'num' or 'step'");
            }
            if (v.contains("num")) {
                auto p = path;
                p.push_back("num");
                const std::size_t n = count(v.at("num"), p, 1);
                out = n == 1 ? std::vector<double>{a} : spectrum::linspace(a, b, n);
            } else {
                const double h = number(v, path, "step");
                if (!(h > 0.0) || b < a) {
                    fail(path, "needs step > 0 and stop >= start");
                }
                const auto n = static_cast<std::size_t>(std::floor((b - a) / h + 1e-9)) + 1;
                if (n > 10'000'000) {
                    fail(path, "too many grid points");
                }
                for (std::size_t i = 0; i < n; ++i) {
                    out.push_back(a + static_cast<double>(i) * h);
                }
            }
        } else {
            fail(path, "must be an array or a {start, stop, num|step} object");
        }
        if (out.empty()) {
            fail(path, "grid is empty");
        }
        return out;
    }
};

json canonical_of(const RunConfig& c) {
    json j;
    j["lambda"] = c.lambda;
    j["beta"] = c.beta;
    j["eta"] = c.eta;
    j["nbar"] = c.nbar;
    j["T"] = c.T;
    j["truncation"] = c.truncation ? json(*c.truncation) : json(nullptr);
    j["beta_grid"] = c.beta_grid;
    j["eta_grid"] = c.eta_grid;
    j["T_grid"] = c.T_grid;
    if (c.phase_space) {
        j["phase_space"] = {{"Q", c.phase_space->Q}, {"P", c.phase_space->P}};
    }
    if (c.scan) {
        j["degeneracy_scan"] = {{"beta_lo", c.scan->beta_lo}, {"beta_hi", c.scan->beta_hi}, {"points", c.scan->points}};
    }
    j["format"] = c.format;
    j["method"] = std::string(lindblad::to_string(c.method));
    j["steady_state_tol"] = c.steady_state_tol;
    return j;
}

void rehash(RunConfig& c) {
    c.canonical = canonical_of(c);
    c.hash = io::sha256_hex(c.canonical.dump());
}

// ---- tables ---------------------------------------------------------------------------

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    json meta = json::object();
};

std::string cell_text(const Cell& c) {
    if (std::holds_alternative<double>(c)) {
        return io::format_double(std::get<double>(c));
    }
    if (std::holds_alternative<std::string>(c)) {
        return std::get<std::string>(c);
    }
    return "";
}

json cell_json(const Cell& c) {
    if (std::holds_alternative<double>(c)) {
        const double x = std::get<double>(c);
        if (!std::isfinite(x)) {
            return io::format_double(x);
        }
        // round to the 12 digits the CSV carries; the shortest round-trip print keeps them
        return std::stod(io::format_double(x));
    }
    if (std::holds_alternative<std::string>(c)) {
        return std::get<std::string>(c);
    }
    return nullptr;
}

Cell opt(const std::optional<double>& x) { return x ? Cell(*x) : Cell(); }

std::filesystem::path write_table(const RunConfig& cfg, const Table& t) {
    std::filesystem::create_directories(cfg.out_dir);
    const std::string header = io::header_line(cfg.hash);
    std::filesystem::path path = cfg.out_dir / (t.name + "." + cfg.format);
    if (cfg.format == "csv") {
        io::CsvWriter w(header, t.columns);
        for (const auto& r : t.rows) {
            std::vector<std::string> cells;
            for (const auto& c : r) {
                cells.push_back(cell_text(c));
            }
            w.row(cells);
        }
        io::write_file(path, w.text());
    } else {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json o = json::object();
            for (std::size_t i = 0; i < r.size(); ++i) {
                o[t.columns[i]] = cell_json(r[i]);
            }
            rows.push_back(std::move(o));
        }
        json doc = {{"columns", t.columns}, {"rows", rows}, {"meta", t.meta}, {"config", cfg.canonical}};
        io::write_file(path, header + "\n" + doc.dump(1) + "\n");
    }
    return path;
}

template <class F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::ConfigError:
        case ErrorKind::InvalidParameter:
        case ErrorKind::DegenerateScaling:
        case ErrorKind::WrongSignRegime:
            return kConfigError;
        default:
            return kSolverFailure;
        }
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSolverFailure;
    }
}

} // namespace

model::ScaledParams RunConfig::scaled() const {
    try {
        return model::ScaledParams(lambda, beta, eta, nbar);
    } catch (const Error& e) {
        throw Error(ErrorKind::ConfigError, e.what());
    }
}

std::size_t RunConfig::N() const { return truncation ? *truncation : model::default_truncation(lambda); }

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ConfigError,
                    "line " + std::to_string(line_at(text, e.byte > 0 ? e.byte - 1 : 0)) + ": malformed JSON (" +
                        e.what() + ")");
    }
    const Ctx ctx{text};
    ctx.only_keys(root, {}, {"scaled", "lab", "truncation", "grids", "output", "method", "tolerances",
                             "degeneracy_scan", "jobs"});
    if (root.contains("scaled") == root.contains("lab")) {
        ctx.fail({}, "exactly one of the 'scaled' and 'lab' parameter blocks is required");
    }
    RunConfig c;
    if (root.contains("scaled")) {
        const std::vector<std::string> p{"scaled"};
        const auto& s = root.at("scaled");
        ctx.only_keys(s, p, {"lambda", "beta", "eta", "nbar"});
        c.lambda = ctx.number(s, p, "lambda");
        c.beta = ctx.number(s, p, "beta");
        c.eta = ctx.opt_number(s, p, "eta").value_or(0.0);
        c.nbar = ctx.opt_number(s, p, "nbar").value_or(0.0);
        if (!(c.lambda > 0.0)) {
            ctx.fail({"scaled", "lambda"}, "must be > 0");
        }
        if (!(c.beta >= 0.0)) {
            ctx.fail({"scaled", "beta"}, "must be >= 0");
        }
        if (!(c.eta >= 0.0)) {
            ctx.fail({"scaled", "eta"}, "must be >= 0");
        }
        if (!(c.nbar >= 0.0)) {
            ctx.fail({"scaled", "nbar"}, "must be >= 0");
        }
        c.T = c.nbar > 0.0 ? 1.0 / std::log1p(1.0 / c.nbar) : 0.0;
    } else {
        const std::vector<std::string> p{"lab"};
        const auto& s = root.at("lab");
        ctx.only_keys(s, p, {"m", "Omega", "gamma", "F0", "nu", "eta", "T_over_Omega"});
        model::LabFrameParams lab;
        lab.m = ctx.number(s, p, "m");
        lab.Omega = ctx.number(s, p, "Omega");
        lab.gamma = ctx.number(s, p, "gamma");
        lab.F0 = ctx.number(s, p, "F0");
        lab.nu = ctx.number(s, p, "nu");
        c.eta = ctx.opt_number(s, p, "eta").value_or(0.0);
        c.T = ctx.opt_number(s, p, "T_over_Omega").value_or(0.0);
        try {
            c.nbar = model::thermal_occupation(c.T);
            const auto sp = model::scale(model::derive_rwa(lab), c.eta, c.nbar);
            c.lambda = sp.lambda();
            c.beta = sp.beta();
        } catch (const Error& e) {
            ctx.fail(p, e.what());
        }
        c.from_lab = true;
    }
    if (root.contains("truncation")) {
        c.truncation = ctx.count(root.at("truncation"), {"truncation"}, 2);
    }
    if (root.contains("grids")) {
        const std::vector<std::string> p{"grids"};
        const auto& g = root.at("grids");
        ctx.only_keys(g, p, {"beta", "eta", "T", "phase_space"});
        if (g.contains("beta")) {
            c.beta_grid = ctx.grid(g.at("beta"), {"grids", "beta"});
        }
        if (g.contains("eta")) {
            c.eta_grid = ctx.grid(g.at("eta"), {"grids", "eta"});
            for (double e : c.eta_grid) {
                if (!(e >= 0.0)) {
                    ctx.fail({"grids", "eta"}, "values must be >= 0");
                }
            }
        }
        if (g.contains("T")) {
            c.T_grid = ctx.grid(g.at("T"), {"grids", "T"});
            for (double t : c.T_grid) {
                if (!(t >= 0.0)) {
                    ctx.fail({"grids", "T"}, "values must be >= 0");
                }
            }
        }
        if (g.contains("phase_space")) {
            const std::vector<std::string> pp{"grids", "phase_space"};
            const auto& ps = g.at("phase_space");
            ctx.only_keys(ps, pp, {"Q", "P"});
            if (!ps.contains("Q") || !ps.contains("P")) {
                ctx.fail(pp, "needs both 'Q' and 'P'");
            }
            c.phase_space = PhaseGrid{ctx.grid(ps.at("Q"), {"grids", "phase_space", "Q"}),
                                      ctx.grid(ps.at("P"), {"grids", "phase_space", "P"})};
        }
    }
    if (root.contains("degeneracy_scan")) {
        const std::vector<std::string> p{"degeneracy_scan"};
        const auto& d = root.at("degeneracy_scan");
        ctx.only_keys(d, p, {"beta_lo", "beta_hi", "points"});
        ScanWindow w;
        w.beta_lo = ctx.opt_number(d, p, "beta_lo").value_or(w.beta_lo);
        w.beta_hi = ctx.opt_number(d, p, "beta_hi").value_or(w.beta_hi);
        if (d.contains("points")) {
            w.points = ctx.count(d.at("points"), {"degeneracy_scan", "points"}, 3);
        }
        if (!(0.0 < w.beta_lo && w.beta_lo < w.beta_hi)) {
            ctx.fail(p, "needs 0 < beta_lo < beta_hi");
        }
        c.scan = w;
    }
    if (root.contains("output")) {
        const std::vector<std::string> p{"output"};
        const auto& o = root.at("output");
        ctx.only_keys(o, p, {"dir", "format"});
        if (o.contains("dir")) {
            if (!o.at("dir").is_string()) {
                ctx.fail({"output", "dir"}, "must be a string");
            }
            c.out_dir = o.at("dir").get<std::string>();
        }
        if (o.contains("format")) {
            const auto& f = o.at("format");
            if (!f.is_string() || (f != "csv" && f != "json")) {
                ctx.fail({"output", "format"}, "must be \"csv\" or \"json\"");
            }
            c.format = f.get<std::string>();
        }
    }
    if (root.contains("method")) {
        const auto& m = root.at("method");
        if (!m.is_string()) {
            ctx.fail({"method"}, "must be a string");
        }
        try {
            c.method = lindblad::parse_method(m.get<std::string>());
        } catch (const Error&) {
            ctx.fail({"method"}, "must be \"null-space\" or \"long-time\"");
        }
    }
    if (root.contains("tolerances")) {
        const std::vector<std::string> p{"tolerances"};
        const auto& t = root.at("tolerances");
        ctx.only_keys(t, p, {"steady_state"});
        if (t.contains("steady_state")) {
            c.steady_state_tol = ctx.number(t, p, "steady_state");
            if (!(c.steady_state_tol > 0.0)) {
                ctx.fail({"tolerances", "steady_state"}, "must be > 0");
            }
        }
    }
    if (root.contains("jobs")) {
        c.jobs = static_cast<unsigned>(ctx.count(root.at("jobs"), {"jobs"}, 1));
    }
    rehash(c);
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ConfigError, "cannot read config file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void apply_overrides(RunConfig& cfg, const Overrides& o) {
    if (o.out_dir) {
        cfg.out_dir = *o.out_dir;
    }
    if (o.format) {
        if (*o.format != "csv" && *o.format != "json") {
            throw Error(ErrorKind::ConfigError, "--format must be csv or json");
        }
        cfg.format = *o.format;
    }
    if (o.jobs) {
        if (*o.jobs < 1) {
            throw Error(ErrorKind::ConfigError, "--jobs must be >= 1");
        }
        cfg.jobs = *o.jobs;
    }
    if (o.method) {
        try {
            cfg.method = lindblad::parse_method(*o.method);
        } catch (const Error& e) {
            throw Error(ErrorKind::ConfigError, e.what());
        }
    }
    if (o.truncation) {
        if (*o.truncation < 2) {
            throw Error(ErrorKind::ConfigError, "--truncation must be >= 2");
        }
        cfg.truncation = *o.truncation;
    }
    rehash(cfg);
}

// ---- subcommands ----------------------------------------------------------------------

int cmd_landscape(const RunConfig& cfg) {
    return guarded([&] {
        if (!cfg.phase_space) {
            throw Error(ErrorKind::ConfigError, "landscape needs grids.phase_space");
        }
        Table t{"landscape", {"label", "Q", "P", "g"}, {}};
        for (double q : cfg.phase_space->Q) {
            for (double p : cfg.phase_space->P) {
                t.rows.push_back({std::string("grid"), q, p, classical::quasienergy({q, p}, cfg.beta)});
            }
        }
        const auto ex = classical::extrema(cfg.beta);
        for (const auto& fp : ex.points) {
            t.rows.push_back({std::string("extremum:") + classical::to_string(fp.extremum), fp.point.Q, fp.point.P,
                              classical::quasienergy(fp.point, cfg.beta)});
        }
        if (cfg.eta > 0.0 && cfg.beta > 0.0) {
            for (const auto& fp : classical::damped_fixed_points(cfg.beta, cfg.eta)) {
                t.rows.push_back({std::string("fixed:") + classical::to_string(fp.branch) + ":" +
                                      classical::to_string(fp.kind),
                                  fp.point.Q, fp.point.P, classical::quasienergy(fp.point, cfg.beta)});
            }
        }
        t.meta = {{"beta", cfg.beta}, {"eta", cfg.eta}, {"outside_window", ex.outside_window}};
        std::cout << write_table(cfg, t).string() << "\n";
        return kOk;
    });
}

int cmd_spectrum(const RunConfig& cfg, bool degeneracy_scan) {
    return guarded([&] {
        const auto sp = cfg.scaled();
        const std::size_t N = cfg.N();
        const auto grid = spectrum::default_position_grid();

        Table cut{"potential_cut", {"Q", "g"}, {}};
        for (double q : grid) {
            cut.rows.push_back({q, classical::quasienergy({q, 0.0}, sp.beta())});
        }
        write_table(cfg, cut);

        const auto spec = spectrum::quasienergy_spectrum(N, sp.lambda(), sp.beta());
        std::optional<spectrum::LevelClassification> cls;
        if (sp.beta() < 4.0 / 27.0) {
            cls = spectrum::classify_levels(spec);
        } else {
            std::cout << "single-well: beta=" << io::format_double(sp.beta())
                      << " is outside (0, 4/27); levels are not classified\n";
        }
        Table levels{"levels", {"index", "g_n", "region"}, {}};
        for (Eigen::Index k = 0; k < spec.energies.size(); ++k) {
            const auto region = cls ? cls->levels[static_cast<std::size_t>(k)].region : spectrum::LevelRegion::Unclassified;
            levels.rows.push_back({static_cast<double>(k), spec.energies(k), std::string(spectrum::to_string(region))});
        }
        levels.meta = {{"lambda", sp.lambda()}, {"beta", sp.beta()}, {"N", N}};
        write_table(cfg, levels);

        if (cls) {
            const auto lm = spectrum::landmark_levels(*cls);
            const std::pair<const char*, std::optional<std::size_t>> picks[] = {
                {"density_near_max", lm.near_max},
                {"density_near_min", lm.near_min},
                {"density_near_saddle", lm.near_saddle},
                {"density_outer_torus", lm.outer}};
            for (const auto& [name, level] : picks) {
                if (!level) {
                    std::cout << name << ": no level in this region\n";
                    continue;
                }
                const auto rho = spectrum::position_density(spec.states.col(static_cast<Eigen::Index>(*level)),
                                                            sp.lambda(), grid);
                Table d{name, {"Q", "density"}, {}};
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    d.rows.push_back({grid[i], rho[i]});
                }
                d.meta = {{"level", *level}, {"g_n", spec.energies(static_cast<Eigen::Index>(*level))}};
                write_table(cfg, d);
            }
        }

        if (degeneracy_scan) {
            const ScanWindow w = cfg.scan.value_or(ScanWindow{});
            const auto found = spectrum::degeneracy_scan(sp.lambda(), w.beta_lo, w.beta_hi, w.points, N);
            Table a{"anticrossings",
                    {"beta", "gap", "inner_level", "outer_level", "inner_g", "outer_g", "inner_weight_of_inner",
                     "inner_weight_of_outer"},
                    {}};
            for (const auto& x : found) {
                a.rows.push_back({x.beta, x.gap, static_cast<double>(x.inner_level), static_cast<double>(x.outer_level),
                                  x.inner_g, x.outer_g, x.inner_weight_of_inner, x.inner_weight_of_outer});
            }
            write_table(cfg, a);
            std::cout << found.size() << " anticrossing(s) in [" << io::format_double(w.beta_lo) << ", "
                      << io::format_double(w.beta_hi) << "]\n";
        }
        return kOk;
    });
}

int cmd_fixed_points(const RunConfig& cfg) {
    return guarded([&] {
        if (!(cfg.beta > 0.0)) {
            throw Error(ErrorKind::ConfigError, "fixed-points needs beta > 0");
        }
        const auto etas = cfg.eta_grid.empty() ? std::vector<double>{cfg.eta} : cfg.eta_grid;
        Table t{"fixed_points", {"eta", "branch", "Q", "P", "r", "stable"}, {}};
        for (const auto& row : classical::branch_curves(cfg.beta, etas)) {
            if (row.point) {
                t.rows.push_back({row.eta, std::string(classical::to_string(row.branch)), row.point->point.Q,
                                  row.point->point.P, row.point->amplitude,
                                  std::string(classical::to_string(row.point->kind))});
            } else {
                t.rows.push_back({row.eta, std::string(classical::to_string(row.branch)), Cell(), Cell(), Cell(),
                                  std::string("absent")});
            }
        }
        t.meta = {{"beta", cfg.beta}};
        std::cout << write_table(cfg, t).string() << "\n";
        return kOk;
    });
}

int cmd_eta_eff(const RunConfig& cfg) {
    return guarded([&] {
        const auto sp = cfg.scaled();
        const auto etas = cfg.eta_grid.empty() ? std::vector<double>{sp.eta()} : cfg.eta_grid;
        const auto Ts = cfg.T_grid.empty() ? std::vector<double>{cfg.T} : cfg.T_grid;
        metastable::TableOptions opts;
        opts.N = cfg.N();
        opts.method = cfg.method;
        opts.solver.tol = cfg.steady_state_tol;
        opts.jobs = cfg.jobs;
        const auto rows = metastable::eta_eff_table(sp.lambda(), sp.beta(), etas, Ts, opts);

        Table t{"eta_eff", {"eta", "T", "branch", "Q", "P", "eta_eff", "delta_eta", "weight", "status"}, {}};
        if (cfg.format == "json") {
            for (const char* extra : {"distance", "N", "nbar", "residual", "method"}) {
                t.columns.push_back(extra);
            }
        }
        bool partial = false;
        for (const auto& r : rows) {
            std::vector<Cell> cells{r.eta, r.T, std::string(classical::to_string(r.branch))};
            if (r.state) {
                const auto& s = *r.state;
                cells.insert(cells.end(), {s.q_mean, s.p_mean, opt(s.eta_eff),
                                           s.eta_eff ? Cell(*s.eta_eff - r.eta) : Cell(), s.weight});
            } else {
                cells.insert(cells.end(), {Cell(), Cell(), Cell(), Cell(), Cell()});
            }
            cells.push_back(r.status);
            if (cfg.format == "json") {
                cells.push_back(r.state ? Cell(r.state->distance_to_branch) : Cell());
                cells.push_back(static_cast<double>(r.N));
                cells.push_back(r.nbar);
                cells.push_back(r.residual);
                cells.push_back(std::string(lindblad::to_string(r.method)));
            }
            partial = partial || r.status.rfind("error", 0) == 0;
            t.rows.push_back(std::move(cells));
        }
        t.meta = {{"lambda", sp.lambda()}, {"beta", sp.beta()}, {"N", opts.N},
                  {"method", std::string(lindblad::to_string(cfg.method))}};
        std::cout << write_table(cfg, t).string() << "\n";
        return partial ? kPartialSweep : kOk;
    });
}

} // namespace duffing::cli

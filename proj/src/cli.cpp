#include "qdeph/cli.hpp"

#include "qdeph/metrology.hpp"
#include "qdeph/special_functions.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace qdeph::cli {

namespace {

// ---------------------------------------------------------------- formatting

std::string fmt(double v) {
    if (!std::isfinite(v))
        throw accuracy_error("non-finite value reached the output pipeline", v, 0.0);
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v); // shortest round-trip
    return std::string(buf, res.ptr);
}

std::string fmt(std::int64_t v) { return std::to_string(v); }

template <typename T>
std::string join(const std::vector<T>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += fmt(xs[i]);
    }
    return out;
}

// ------------------------------------------------------------------- parsing

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(line) + ": field '" + key +
                              "': not a number: '" + v + "'",
                          line, key);
    }
}

std::int64_t parse_int(const std::string& v, int line, const std::string& key) {
    std::int64_t x = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw parse_error("line " + std::to_string(line) + ": field '" + key +
                              "': not an integer: '" + v + "'",
                          line, key);
    return x;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// ------------------------------------------------------ deterministic helpers

std::vector<double> log_grid(double lo, double hi, int per_decade) {
    std::vector<double> g;
    const double decades = std::log10(hi / lo);
    const int n = std::max(1, static_cast<int>(std::ceil(decades * per_decade)));
    g.reserve(n + 1);
    for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(10.0, decades * i / n));
    g.push_back(hi);
    return g;
}

std::vector<std::int64_t> log_grid_int(double lo, double hi, int per_decade) {
    std::vector<std::int64_t> g;
    for (double v : log_grid(lo, hi, per_decade)) {
        const auto n = static_cast<std::int64_t>(std::llround(v));
        if (g.empty() || n > g.back()) g.push_back(n);
    }
    return g;
}

// Runs fn(0..count-1) on `threads` workers; outputs must go into preallocated
// per-index slots so results are identical regardless of thread count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    threads = std::clamp(threads, 1, 64);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
        : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open " + path.string());
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out_ << ',';
            out_ << header[i];
        }
        out_ << '\n';
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

// ------------------------------------------------------------ physics set-up

struct Problem {
    SpectralDensity sd;
    ThermalState ts;
    QuadratureSpec quad;
    double w_bar = 1.0;
};

Problem make_problem(const ScenarioConfig& cfg, double s, double combo, double theta) {
    Problem p;
    p.w_bar = 1.0; // natural units: sigma = c = 1
    p.sd = spectral_density_from_combo(s, combo, p.w_bar, cfg.w_s_over_wbar * p.w_bar);
    p.ts.theta = theta;
    p.quad.rel_tol = cfg.rel_tol;
    p.quad.abs_tol = cfg.abs_tol;
    p.quad.max_panels = cfg.max_panels;
    return p;
}

CloudGeometry make_cloud(std::int64_t n) {
    CloudGeometry g;
    g.n_atoms = n;
    g.sigma = 1.0;
    g.c = 1.0;
    return g;
}

double auto_t_min(const ScenarioConfig& cfg) {
    return cfg.t_min > 0.0 ? cfg.t_min : cfg.t_max * 1e-4;
}

std::string theta_tag(double theta) {
    std::string tag = fmt(theta);
    return tag;
}

// --------------------------------------------------------------- computations

void run_gamma_curve(const ScenarioConfig& cfg, const std::filesystem::path& dir,
                     RunOutputs& out) {
    const std::vector<double> thetas =
        cfg.theta_list.empty() ? std::vector<double>{cfg.theta} : cfg.theta_list;
    const std::int64_t n = cfg.n_list.front();
    const CloudGeometry g = make_cloud(n);
    const auto ts = log_grid(auto_t_min(cfg), cfg.t_max, cfg.points_per_decade);

    std::vector<std::string> header{"w_t"};
    for (double th : thetas) header.push_back("gamma_T" + theta_tag(th));
    const bool fig1_layout = cfg.computation == "fig1";
    if (!fig1_layout) header.push_back("delta");

    std::vector<Problem> problems;
    for (double th : thetas) problems.push_back(make_problem(cfg, cfg.s, cfg.coupling_combo, th));

    std::vector<std::vector<std::string>> rows(ts.size());
    parallel_for(ts.size(), cfg.threads, [&](std::size_t i) {
        std::vector<std::string> r{fmt(ts[i])};
        for (const Problem& p : problems)
            r.push_back(fmt(gamma_collective(p.sd, g, p.ts, ts[i], p.quad)));
        if (!fig1_layout)
            r.push_back(fmt(delta_shift(problems.front().sd, g, ts[i], problems.front().quad)));
        rows[i] = std::move(r);
    });

    const auto path = dir / (cfg.out_name + ".csv");
    CsvWriter csv(path, header);
    for (const auto& r : rows) csv.row(r);
    out.files.push_back(path);
    out.report = "gamma curve: " + std::to_string(ts.size()) + " rows, N=" + fmt(n);
}

void run_fisher_sweep(const ScenarioConfig& cfg, const std::filesystem::path& dir,
                      RunOutputs& out) {
    const Problem p = make_problem(cfg, cfg.s, cfg.coupling_combo, cfg.theta);
    const auto tgrid = log_grid(auto_t_min(cfg), cfg.t_max, cfg.points_per_decade);
    const bool one = cfg.mode != "ghz_collective";
    const bool ghz = cfg.mode != "one_by_one";

    std::vector<std::string> header{"w_t"};
    for (std::int64_t n : cfg.n_list) {
        if (one) header.push_back("F1_N" + fmt(n));
        if (ghz) header.push_back("FN_N" + fmt(n));
    }

    std::vector<std::vector<std::string>> rows(tgrid.size());
    parallel_for(tgrid.size(), cfg.threads, [&](std::size_t i) {
        std::vector<std::string> r{fmt(tgrid[i])};
        for (std::int64_t n : cfg.n_list) {
            const CloudGeometry g = make_cloud(n);
            if (one)
                r.push_back(fmt(
                    fisher_optimal(p.sd, g, p.ts, tgrid[i], MeasurementMode::one_by_one, p.quad)
                        .fisher));
            if (ghz)
                r.push_back(fmt(
                    fisher_optimal(p.sd, g, p.ts, tgrid[i], MeasurementMode::ghz_collective, p.quad)
                        .fisher));
        }
        rows[i] = std::move(r);
    });

    const auto path = dir / (cfg.out_name + ".csv");
    CsvWriter csv(path, header);
    for (const auto& r : rows) csv.row(r);
    out.files.push_back(path);
    out.report = "fisher sweep: " + std::to_string(tgrid.size()) + " rows";
}

void run_best_time_scan(const ScenarioConfig& cfg, const std::filesystem::path& dir,
                        RunOutputs& out) {
    const Problem p = make_problem(cfg, cfg.s, cfg.coupling_combo, cfg.theta);
    const std::vector<std::string> header{"N", "t_best", "fisher", "gamma", "t_best_zeno"};
    std::vector<std::vector<std::string>> rows(cfg.n_list.size());
    parallel_for(cfg.n_list.size(), cfg.threads, [&](std::size_t i) {
        const CloudGeometry g = make_cloud(cfg.n_list[i]);
        const FisherPoint bt =
            best_time(p.sd, g, p.ts, MeasurementMode::ghz_collective, cfg.t_max, p.quad);
        rows[i] = {fmt(cfg.n_list[i]), fmt(bt.t), fmt(bt.fisher), fmt(bt.gamma),
                   fmt(t_best_zeno(p.sd, g, p.ts))};
    });
    const auto path = dir / (cfg.out_name + ".csv");
    CsvWriter csv(path, header);
    for (const auto& r : rows) csv.row(r);
    out.files.push_back(path);
    out.report = "best-time scan: " + std::to_string(cfg.n_list.size()) + " rows";
}

void run_threshold(const ScenarioConfig& cfg, const std::filesystem::path& dir,
                   RunOutputs& out) {
    const Dimension dim = cfg.dimension == "1D" ? Dimension::d1 : Dimension::d3;
    const TemperatureClass tc =
        cfg.temperature_class == "finite" ? TemperatureClass::finite : TemperatureClass::zero;
    const ThresholdReport r = classify_threshold(cfg.s, dim, tc);
    const auto path = dir / (cfg.out_name + ".csv");
    CsvWriter csv(path, {"s", "dimension", "temperature_class", "all_time_suppression",
                         "zeno_suppression"});
    csv.row({fmt(r.s), cfg.dimension, cfg.temperature_class,
             r.all_time_suppression ? "true" : "false",
             r.zeno_suppression ? "true" : "false"});
    out.files.push_back(path);
    out.report = "threshold: s=" + fmt(r.s) + " " + cfg.dimension + " " + cfg.temperature_class +
                 " all_time=" + (r.all_time_suppression ? "true" : "false") +
                 " zeno=" + (r.zeno_suppression ? "true" : "false");
}

void run_oracle_compare(const ScenarioConfig& cfg, const std::filesystem::path& dir,
                        RunOutputs& out) {
    const Problem p = make_problem(cfg, cfg.s, cfg.coupling_combo, cfg.theta);
    const std::int64_t n = cfg.n_list.front();
    const CloudGeometry g = make_cloud(n);
    const int n_seeds = cfg.seeds;
    const double a = g.collective_width();

    // Seed-averaged discrete gamma at each requested time, against the
    // continuum value plus the analytic incoherent correction
    // N Int J (1-cos wt) coth (1 - e^(-a w^2)) dw.
    std::vector<std::vector<double>> totals(cfg.t_list.size(),
                                            std::vector<double>(n_seeds));
    parallel_for(static_cast<std::size_t>(n_seeds), cfg.threads, [&](std::size_t sidx) {
        const AtomPositions pos = sample_positions(g, cfg.seed + sidx);
        for (std::size_t ti = 0; ti < cfg.t_list.size(); ++ti)
            totals[ti][sidx] =
                gamma_discrete_oracle(p.sd, pos, g, p.ts, cfg.t_list[ti], p.quad).total;
    });

    const auto path = dir / (cfg.out_name + ".csv");
    CsvWriter csv(path, {"w_t", "gamma_discrete_mean", "gamma_discrete_se", "gamma_continuum",
                         "incoherent_correction", "gamma_predicted"});
    for (std::size_t ti = 0; ti < cfg.t_list.size(); ++ti) {
        const double t = cfg.t_list[ti];
        double mean = 0.0;
        for (double v : totals[ti]) mean += v;
        mean /= n_seeds;
        double var = 0.0;
        for (double v : totals[ti]) var += (v - mean) * (v - mean);
        const double se = n_seeds > 1 ? std::sqrt(var / (n_seeds - 1.0) / n_seeds) : 0.0;
        const double cont = gamma_collective(p.sd, g, p.ts, t, p.quad);
        auto fcorr = [&](double w) {
            if (w <= 0.0) return 0.0;
            const double x = a * w * w;
            const double one_m_exp = x < 1e-8 ? x : 1.0 - std::exp(-x);
            const double sh = std::sin(0.5 * w * t);
            return static_cast<double>(n) * j_eval(p.sd, w) * 2.0 * sh * sh *
                   thermal_kernel(p.ts, w) * one_m_exp;
        };
        const double corr =
            integrate_semi_infinite(fcorr, 6.28318530717958647692 / t, p.quad).value;
        csv.row({fmt(t), fmt(mean), fmt(se), fmt(cont), fmt(corr), fmt(cont + corr)});
    }
    out.files.push_back(path);

    // Ensemble mean of the discrete structure factor against
    // N + N(N-1) exp(-k^2 sigma^2 N^(2/3)).
    std::vector<double> ks{0.5 / std::sqrt(a), 1.0 / std::sqrt(a), 2.0 / std::sqrt(a)};
    const auto spath = dir / (cfg.out_name + "_structure.csv");
    CsvWriter scsv(spath, {"k", "s_mean", "s_se", "s_expected"});
    std::vector<std::vector<double>> svals(ks.size(), std::vector<double>(n_seeds));
    parallel_for(static_cast<std::size_t>(n_seeds), cfg.threads, [&](std::size_t sidx) {
        const AtomPositions pos = sample_positions(g, cfg.seed + sidx);
        const auto dist = pairwise_distances(pos);
        for (std::size_t ki = 0; ki < ks.size(); ++ki)
            svals[ki][sidx] = structure_factor_from_distances(pos.size(), dist, ks[ki]);
    });
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
        double mean = 0.0;
        for (double v : svals[ki]) mean += v;
        mean /= n_seeds;
        double var = 0.0;
        for (double v : svals[ki]) var += (v - mean) * (v - mean);
        const double se = n_seeds > 1 ? std::sqrt(var / (n_seeds - 1.0) / n_seeds) : 0.0;
        const double nn = static_cast<double>(n);
        const double expect = nn + nn * (nn - 1.0) * std::exp(-ks[ki] * ks[ki] * g.axis_variance());
        scsv.row({fmt(ks[ki]), fmt(mean), fmt(se), fmt(expect)});
    }
    out.files.push_back(spath);
    out.report = "oracle comparison: N=" + fmt(n) + ", " + std::to_string(n_seeds) + " seeds";
}

void run_fig3(const ScenarioConfig& cfg, const std::filesystem::path& dir, RunOutputs& out) {
    const Problem p4 = make_problem(cfg, 4.0, 0.12, 0.0);
    const Problem p2 = make_problem(cfg, 2.0, 0.02, 0.0);
    const double t_max = cfg.t_max;
    const auto ns = log_grid_int(10.0, 1e6, 16);

    struct Row {
        double ratio4, ratio2, tb, tz;
    };
    std::vector<Row> rows(ns.size());
    parallel_for(ns.size(), cfg.threads, [&](std::size_t i) {
        const CloudGeometry g = make_cloud(ns[i]);
        // Ratio columns compare the best Fisher information achievable in the
        // window (interior extremum or the boundary) against the one-by-one
        // value at t_max; the t_best column reports the interior switching
        // time that the root of the extremum condition defines.
        auto ratio = [&](const Problem& p) {
            const FisherPoint bt =
                best_time(p.sd, g, p.ts, MeasurementMode::ghz_collective, t_max, p.quad);
            const double f_edge =
                fisher_optimal(p.sd, g, p.ts, t_max, MeasurementMode::ghz_collective, p.quad)
                    .fisher;
            const double f1 =
                fisher_optimal(p.sd, g, p.ts, t_max, MeasurementMode::one_by_one, p.quad).fisher;
            return std::max(bt.fisher, f_edge) / f1;
        };
        const FisherPoint b4 =
            best_time(p4.sd, g, p4.ts, MeasurementMode::ghz_collective, t_max, p4.quad);
        rows[i] = {ratio(p4), ratio(p2), b4.t, t_best_zeno(p4.sd, g, p4.ts)};
    });

    const auto path = dir / (cfg.out_name + ".csv");
    CsvWriter csv(path, {"N", "ratio_s4", "ratio_s2", "t_best_numeric", "t_best_zeno"});
    for (std::size_t i = 0; i < ns.size(); ++i)
        csv.row({fmt(ns[i]), fmt(rows[i].ratio4), fmt(rows[i].ratio2), fmt(rows[i].tb),
                 fmt(rows[i].tz)});
    out.files.push_back(path);
    out.report = "fig3: " + std::to_string(ns.size()) + " rows";
}

void run_fig5(const ScenarioConfig& cfg, const std::filesystem::path& dir, RunOutputs& out) {
    const auto ns = log_grid_int(1e2, 1e6, 8);
    std::vector<double> thetas = cfg.theta_list;
    if (thetas.empty())
        for (int i = 0; i <= 10; ++i) thetas.push_back(0.1 * i);

    struct Cell {
        double theta;
        std::int64_t n;
        double tb;
    };
    std::vector<Cell> cells;
    for (double th : thetas)
        for (std::int64_t n : ns) cells.push_back({th, n, 0.0});

    parallel_for(cells.size(), cfg.threads, [&](std::size_t i) {
        const Problem p = make_problem(cfg, cfg.s, cfg.coupling_combo, cells[i].theta);
        const CloudGeometry g = make_cloud(cells[i].n);
        cells[i].tb =
            best_time(p.sd, g, p.ts, MeasurementMode::ghz_collective, cfg.t_max, p.quad).t;
    });

    const auto path = dir / (cfg.out_name + ".csv");
    CsvWriter csv(path, {"theta", "N", "t_best"});
    for (const Cell& c : cells) csv.row({fmt(c.theta), fmt(c.n), fmt(c.tb)});
    out.files.push_back(path);
    out.report = "fig5: " + std::to_string(cells.size()) + " rows";
}

void write_meta(const ScenarioConfig& cfg, const std::filesystem::path& dir,
                RunOutputs& out) {
    const auto path = dir / (cfg.out_name + ".meta");
    std::ofstream meta(path, std::ios::binary);
    if (!meta) throw std::runtime_error("cannot open " + path.string());
    meta << cfg.serialize();
    out.files.push_back(path);
}

} // namespace

void ScenarioConfig::validate() const {
    static const std::vector<std::string> kComputations{
        "gamma_curve", "fisher_sweep", "best_time_scan", "threshold", "oracle_compare",
        "fig1",        "fig2",         "fig3",           "fig4",      "fig5"};
    if (std::find(kComputations.begin(), kComputations.end(), computation) ==
        kComputations.end())
        throw parse_error("unknown computation '" + computation + "'");
    if (!(s > -1.0)) throw std::domain_error("domain violation: s must be > -1");
    if (!(coupling_combo >= 0.0))
        throw std::domain_error("domain violation: coupling_combo must be >= 0");
    if (!(theta >= 0.0)) throw std::domain_error("domain violation: theta must be >= 0");
    for (double th : theta_list)
        if (!(th >= 0.0)) throw std::domain_error("domain violation: theta_list entries must be >= 0");
    if (n_list.empty()) throw std::domain_error("domain violation: n_list must be nonempty");
    for (std::int64_t n : n_list)
        if (n < 1) throw std::domain_error("domain violation: n_list entries must be >= 1");
    if (!(t_max > 0.0)) throw std::domain_error("domain violation: t_max must be > 0");
    if (t_min < 0.0 || (t_min > 0.0 && t_min >= t_max))
        throw std::domain_error("domain violation: t_min must be 0 (auto) or in (0, t_max)");
    if (points_per_decade < 1)
        throw std::domain_error("domain violation: points_per_decade must be >= 1");
    if (!(w_s_over_wbar > 0.0))
        throw std::domain_error("domain violation: w_s_over_wbar must be > 0");
    if (seeds < 1) throw std::domain_error("domain violation: seeds must be >= 1");
    if (mode != "one_by_one" && mode != "ghz_collective" && mode != "both")
        throw std::domain_error("domain violation: mode must be one_by_one|ghz_collective|both");
    if (dimension != "3D" && dimension != "1D")
        throw std::domain_error("domain violation: dimension must be 3D|1D");
    if (temperature_class != "zero" && temperature_class != "finite")
        throw std::domain_error("domain violation: temperature_class must be zero|finite");
    for (double t : t_list)
        if (!(t > 0.0)) throw std::domain_error("domain violation: t_list entries must be > 0");
    if (!(rel_tol > 0.0)) throw std::domain_error("domain violation: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw std::domain_error("domain violation: abs_tol must be >= 0");
    if (max_panels < 1) throw std::domain_error("domain violation: max_panels must be >= 1");
    if (threads < 1 || threads > 64)
        throw std::domain_error("domain violation: threads must be in [1, 64]");
}

std::string ScenarioConfig::serialize() const {
    std::map<std::string, std::string> kv;
    kv["computation"] = computation;
    kv["s"] = fmt(s);
    kv["coupling_combo"] = fmt(coupling_combo);
    kv["theta"] = fmt(theta);
    if (!theta_list.empty()) kv["theta_list"] = join(theta_list);
    kv["n_list"] = join(n_list);
    kv["t_max"] = fmt(t_max);
    kv["t_min"] = fmt(t_min);
    kv["points_per_decade"] = std::to_string(points_per_decade);
    kv["w_s_over_wbar"] = fmt(w_s_over_wbar);
    kv["seed"] = std::to_string(seed);
    kv["seeds"] = std::to_string(seeds);
    kv["mode"] = mode;
    kv["dimension"] = dimension;
    kv["temperature_class"] = temperature_class;
    kv["t_list"] = join(t_list);
    kv["n_branch"] = std::to_string(n_branch);
    kv["rel_tol"] = fmt(rel_tol);
    kv["abs_tol"] = fmt(abs_tol);
    kv["max_panels"] = std::to_string(max_panels);
    kv["threads"] = std::to_string(threads);
    kv["out_name"] = out_name;
    kv["artifact_version"] = kArtifactVersion;
    std::string out;
    for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
    return out;
}

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg;
    cfg.computation.clear();
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("line " + std::to_string(line_no) + ": expected key = value",
                              line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw parse_error("line " + std::to_string(line_no) + ": empty key", line_no);

        if (key == "computation") cfg.computation = val;
        else if (key == "s") cfg.s = parse_double(val, line_no, key);
        else if (key == "coupling_combo") cfg.coupling_combo = parse_double(val, line_no, key);
        else if (key == "theta") cfg.theta = parse_double(val, line_no, key);
        else if (key == "theta_list") {
            cfg.theta_list.clear();
            for (const auto& item : split_list(val))
                cfg.theta_list.push_back(parse_double(item, line_no, key));
        } else if (key == "n_list") {
            cfg.n_list.clear();
            for (const auto& item : split_list(val))
                cfg.n_list.push_back(parse_int(item, line_no, key));
        } else if (key == "t_max") cfg.t_max = parse_double(val, line_no, key);
        else if (key == "t_min") cfg.t_min = parse_double(val, line_no, key);
        else if (key == "points_per_decade")
            cfg.points_per_decade = static_cast<int>(parse_int(val, line_no, key));
        else if (key == "w_s_over_wbar") cfg.w_s_over_wbar = parse_double(val, line_no, key);
        else if (key == "seed")
            cfg.seed = static_cast<std::uint64_t>(parse_int(val, line_no, key));
        else if (key == "seeds") cfg.seeds = static_cast<int>(parse_int(val, line_no, key));
        else if (key == "mode") cfg.mode = val;
        else if (key == "dimension") cfg.dimension = val;
        else if (key == "temperature_class") cfg.temperature_class = val;
        else if (key == "t_list") {
            cfg.t_list.clear();
            for (const auto& item : split_list(val))
                cfg.t_list.push_back(parse_double(item, line_no, key));
        } else if (key == "n_branch")
            cfg.n_branch = static_cast<int>(parse_int(val, line_no, key));
        else if (key == "rel_tol") cfg.rel_tol = parse_double(val, line_no, key);
        else if (key == "abs_tol") cfg.abs_tol = parse_double(val, line_no, key);
        else if (key == "max_panels")
            cfg.max_panels = static_cast<int>(parse_int(val, line_no, key));
        else if (key == "threads") cfg.threads = static_cast<int>(parse_int(val, line_no, key));
        else if (key == "out_name") cfg.out_name = val;
        else if (key == "artifact_version" || key == "preset") {
            // echoed by .meta sidecars; accepted so a sidecar is a valid config
        } else
            throw parse_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'",
                              line_no, key);
    }
    if (cfg.computation.empty()) throw parse_error("missing required key 'computation'");
    if (cfg.out_name.empty()) cfg.out_name = cfg.computation;
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read config file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

ScenarioConfig preset_config(const std::string& name) {
    ScenarioConfig cfg;
    cfg.computation = name;
    cfg.out_name = name;
    if (name == "fig1") {
        cfg.s = 4.0;
        cfg.coupling_combo = 0.12;
        cfg.n_list = {1000};
        cfg.theta_list = {0.0, 0.5, 1.0};
        cfg.t_min = 0.01;
        cfg.t_max = 100.0;
    } else if (name == "fig2") {
        cfg.s = 4.0;
        cfg.coupling_combo = 0.12;
        cfg.n_list = {1000, 10000, 100000, 1000000};
        cfg.theta = 0.0;
        cfg.t_min = 0.05;
        cfg.t_max = 30.0;
    } else if (name == "fig3") {
        cfg.t_max = 100.0; // s/combo pairs are fixed inside the fig3 runner
    } else if (name == "fig4") {
        cfg.s = 2.0;
        cfg.coupling_combo = 0.12;
        cfg.n_list = {1000, 10000, 100000, 1000000};
        cfg.theta = 0.0;
        cfg.t_min = 0.01;
        cfg.t_max = 3.5;
    } else if (name == "fig5") {
        cfg.s = 4.0;
        cfg.coupling_combo = 0.12;
        cfg.t_max = 20.0;
    } else {
        throw parse_error("unknown preset '" + name + "'");
    }
    return cfg;
}

RunOutputs run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir) {
    cfg.validate();
    std::filesystem::create_directories(out_dir);
    RunOutputs out;
    if (cfg.computation == "gamma_curve" || cfg.computation == "fig1")
        run_gamma_curve(cfg, out_dir, out);
    else if (cfg.computation == "fisher_sweep" || cfg.computation == "fig2" ||
             cfg.computation == "fig4")
        run_fisher_sweep(cfg, out_dir, out);
    else if (cfg.computation == "best_time_scan")
        run_best_time_scan(cfg, out_dir, out);
    else if (cfg.computation == "threshold")
        run_threshold(cfg, out_dir, out);
    else if (cfg.computation == "oracle_compare")
        run_oracle_compare(cfg, out_dir, out);
    else if (cfg.computation == "fig3")
        run_fig3(cfg, out_dir, out);
    else if (cfg.computation == "fig5")
        run_fig5(cfg, out_dir, out);
    write_meta(cfg, out_dir, out);
    return out;
}

} // namespace qdeph::cli

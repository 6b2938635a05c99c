#include "extremal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "extremal/chordal.hpp"
#include "extremal/diameter.hpp"
#include "extremal/domtarget.hpp"
#include "extremal/extremities.hpp"
#include "extremal/generators.hpp"
#include "extremal/io.hpp"
#include "extremal/modular.hpp"

namespace extremal {

namespace {

constexpr const char* kSchema = "extremal-diam/1";

using nlohmann::json;

json stats_to_json(const RunStats& s) {
    json j;
    j["search_runs"] = s.search_runs;
    j["work"] = s.work;
    j["cutoff"] = s.cutoff;
    if (s.delta_star >= 0) j["delta_star"] = s.delta_star;
    j["t"] = s.t;
    j["extremities_computed"] = s.extremities_computed;
    j["promise_violated"] = s.promise_violated;
    j["center_fallback"] = s.center_fallback;
    j["branch"] = s.branch;
    return j;
}

struct VerifyOutcome {
    bool requested = false;
    bool ok = true;
};

VerifyOutcome verify_diameter(const Graph& g, int value, bool requested) {
    VerifyOutcome v;
    v.requested = requested;
    if (requested) v.ok = (eccentricity_oracle(g).diameter == value);
    return v;
}

int emit_diameter(std::ostream& out, const std::string& file, const std::string& algorithm,
                  const Graph& g, const DiameterResult& r, bool verify, bool as_json) {
    VerifyOutcome v = verify_diameter(g, r.value, verify);
    if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["command"] = algorithm;
        j["input"] = file;
        j["diameter"] = r.value;
        j["certificate"] = {r.certificate.first, r.certificate.second};
        j["stats"] = stats_to_json(r.stats);
        if (v.requested) j["verified"] = v.ok;
        out << j.dump(2) << "\n";
    } else {
        out << "diameter " << r.value;
        if (v.requested) out << (v.ok ? " (verified)" : " (MISMATCH)");
        if (r.stats.promise_violated) out << " [promise violated]";
        out << "\n";
        out << "certificate " << r.certificate.first << " " << r.certificate.second << "\n";
    }
    if (v.requested && !v.ok) return 1;
    if (r.stats.promise_violated) return 3;
    return 0;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        double lx = std::log(x[i]), ly = std::log(std::max(y[i], 1.0));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoll(tok));
        } catch (...) {
            throw input_error(std::string("bad ") + what + " list: " + text);
        }
    }
    if (out.empty()) throw input_error(std::string("empty ") + what + " list");
    return out;
}

int worker_count() {
    const char* env = std::getenv("EXTREMAL_DIAM_THREADS");
    int cap = env ? std::atoi(env) : 1;
    if (cap == 0) cap = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, cap);
}

struct BenchRun {
    long long n;
    long long seed;
    int exact_value = 0, oracle_value = 0;
    std::int64_t exact_runs = 0, oracle_runs = 0;
    std::int64_t exact_work = 0, oracle_work = 0;
    double exact_ms = 0, oracle_ms = 0;
};

int cmd_bench(const std::string& family, const std::string& sizes_text,
              const std::string& seeds_text, double density, bool as_json, std::ostream& out) {
    auto sizes = parse_int_list(sizes_text, "sizes");
    auto seeds = parse_int_list(seeds_text, "seeds");
    std::vector<BenchRun> runs;
    for (long long n : sizes)
        for (long long s : seeds) runs.push_back({n, s});

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::string failure;
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= runs.size()) return;
            BenchRun& r = runs[i];
            try {
                GenSpec spec;
                spec.family = family;
                spec.n = static_cast<int>(r.n);
                spec.k = 4;
                spec.density = density;
                spec.seed = static_cast<std::uint64_t>(r.seed);
                Graph g = largest_component(generate(spec));

                auto t0 = std::chrono::steady_clock::now();
                DiameterResult ex = exact_diameter(g);
                auto t1 = std::chrono::steady_clock::now();
                SearchStats os;
                EccentricityTable table = eccentricity_oracle(g, &os);
                auto t2 = std::chrono::steady_clock::now();

                r.exact_value = ex.value;
                r.oracle_value = table.diameter;
                r.exact_runs = ex.stats.search_runs;
                r.exact_work = ex.stats.work;
                r.oracle_runs = os.search_runs;
                r.oracle_work = os.work;
                r.exact_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                r.oracle_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure.empty()) failure = e.what();
            }
        }
    };
    int workers = std::min<int>(worker_count(), static_cast<int>(runs.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (!failure.empty()) throw input_error("bench run failed: " + failure);

    json per_size = json::array();
    std::vector<double> xs, exact_ws, oracle_ws;
    for (long long n : sizes) {
        std::vector<double> ew, ow, et, ot;
        bool all_match = true;
        for (const BenchRun& r : runs) {
            if (r.n != n) continue;
            ew.push_back(static_cast<double>(r.exact_work));
            ow.push_back(static_cast<double>(r.oracle_work));
            et.push_back(r.exact_ms);
            ot.push_back(r.oracle_ms);
            if (r.exact_value != r.oracle_value) all_match = false;
        }
        json row;
        row["n"] = n;
        row["median_exact_work"] = median(ew);
        row["median_oracle_work"] = median(ow);
        row["median_exact_ms"] = median(et);
        row["median_oracle_ms"] = median(ot);
        row["values_match"] = all_match;
        per_size.push_back(row);
        xs.push_back(static_cast<double>(n));
        exact_ws.push_back(median(ew));
        oracle_ws.push_back(median(ow));
    }
    json j;
    j["schema"] = kSchema;
    j["command"] = "bench";
    j["family"] = family;
    j["density"] = density;
    json jr = json::array();
    for (const BenchRun& r : runs) {
        json row;
        row["n"] = r.n;
        row["seed"] = r.seed;
        row["exact"] = {{"value", r.exact_value},
                        {"search_runs", r.exact_runs},
                        {"work", r.exact_work},
                        {"wall_ms", r.exact_ms}};
        row["oracle"] = {{"value", r.oracle_value},
                         {"search_runs", r.oracle_runs},
                         {"work", r.oracle_work},
                         {"wall_ms", r.oracle_ms}};
        jr.push_back(row);
    }
    j["runs"] = jr;
    j["per_size"] = per_size;
    j["slopes"] = {{"exact", fit_loglog_slope(xs, exact_ws)},
                   {"oracle", fit_loglog_slope(xs, oracle_ws)}};
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "family " << family << "\n";
        for (const auto& row : per_size)
            out << "n=" << row["n"] << " exact_work=" << row["median_exact_work"]
                << " oracle_work=" << row["median_oracle_work"] << "\n";
        out << "slope exact " << j["slopes"]["exact"] << "\n";
        out << "slope oracle " << j["slopes"]["oracle"] << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"diameter and eccentricity computation for graphs with few extremities"};
    app.require_subcommand(1);

    std::string file, outfile, spec_text, family, sizes_text, seeds_text;
    bool verify = false, as_json = false, oblivious = false;
    std::optional<int> alpha, k_hint;
    double density = 8.0;

    auto add_common = [&](CLI::App* sub, bool with_mode) {
        sub->add_option("file", file, "graph file (edge list or DIMACS)")->required();
        sub->add_flag("--verify", verify, "cross-check against the n-BFS oracle");
        sub->add_flag("--json", as_json, "JSON report");
        if (with_mode) {
            auto* a = sub->add_option("--alpha", alpha, "known bound on nonadjacent extremities");
            sub->add_flag("--oblivious", oblivious, "estimate the cutoff instead (default)")
                ->excludes(a);
        }
    };

    auto* c_diam = app.add_subcommand("diameter", "exact diameter");
    add_common(c_diam, true);
    auto* c_ecc = app.add_subcommand("ecc-approx", "eccentricities within one");
    add_common(c_ecc, true);
    auto* c_ext = app.add_subcommand("extremities", "extremity report");
    add_common(c_ext, false);
    auto* c_oracle = app.add_subcommand("oracle", "n-BFS exact baseline");
    add_common(c_oracle, false);
    auto* c_chordal = app.add_subcommand("chordal-diameter", "chordal-specialized diameter");
    add_common(c_chordal, false);
    auto* c_dom = app.add_subcommand("domtarget-diameter", "dominating-target diameter");
    add_common(c_dom, false);
    c_dom->add_option("--k", k_hint, "dominating target cardinality hint");

    auto* c_gen = app.add_subcommand("gen", "generate a corpus graph");
    c_gen->add_option("spec", spec_text, "family:n:k:density:seed")->required();
    c_gen->add_option("-o,--output", outfile, "output edge list")->required();

    auto* c_bench = app.add_subcommand("bench", "scaling harness");
    c_bench->add_option("family", family, "generator family")->required();
    c_bench->add_option("--sizes", sizes_text, "comma-separated sizes")->required();
    c_bench->add_option("--seeds", seeds_text, "comma-separated seeds")->required();
    c_bench->add_option("--density", density, "target average degree");
    c_bench->add_flag("--json", as_json, "JSON report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_gen->parsed()) {
            Graph g = generate(GenSpec::parse(spec_text));
            write_edge_list_file(outfile, g);
            out << "wrote " << outfile << " (" << g.vertex_count() << " vertices, "
                << g.edge_count() << " edges)\n";
            return 0;
        }
        if (c_bench->parsed()) return cmd_bench(family, sizes_text, seeds_text, density, as_json, out);

        Graph g = read_graph_file(file);
        DiameterOptions opt;
        if (alpha) opt.alpha = *alpha;

        if (c_diam->parsed()) {
            DiameterResult r = exact_diameter(g, opt);
            return emit_diameter(out, file, "diameter", g, r, verify, as_json);
        }
        if (c_ecc->parsed()) {
            EccApproxResult r = approx_eccentricities(g, opt);
            VerifyOutcome v;
            v.requested = verify;
            if (verify) {
                EccentricityTable t = eccentricity_oracle(g);
                for (Vertex x = 0; x < g.vertex_count(); ++x)
                    if (r.estimate[x] > t.ecc[x] || r.estimate[x] < t.ecc[x] - 1) v.ok = false;
            }
            if (as_json) {
                json j;
                j["schema"] = kSchema;
                j["command"] = "ecc-approx";
                j["input"] = file;
                j["estimates"] = r.estimate;
                j["stats"] = stats_to_json(r.stats);
                if (v.requested) j["verified"] = v.ok;
                out << j.dump(2) << "\n";
            } else {
                for (Vertex x = 0; x < g.vertex_count(); ++x)
                    out << x << " " << r.estimate[x] << "\n";
                if (v.requested) out << (v.ok ? "(verified)" : "(MISMATCH)") << "\n";
            }
            return v.requested && !v.ok ? 1 : 0;
        }
        if (c_ext->parsed()) {
            if (!g.is_connected()) throw input_error("extremities: graph is disconnected");
            ExtremityReport r = all_extremities_oracle(g);
            if (as_json) {
                json j;
                j["schema"] = kSchema;
                j["command"] = "extremities";
                j["input"] = file;
                j["extremities"] = r.extremities.to_vector();
                j["count"] = r.count;
                j["alpha"] = r.alpha;
                j["alpha_exact"] = r.alpha_exact;
                out << j.dump(2) << "\n";
            } else {
                out << r.count << " extremities, alpha=" << r.alpha
                    << (r.alpha_exact ? "" : " (lower bound)") << "\n";
            }
            return 0;
        }
        if (c_oracle->parsed()) {
            EccentricityTable t = eccentricity_oracle(g);
            if (as_json) {
                json j;
                j["schema"] = kSchema;
                j["command"] = "oracle";
                j["input"] = file;
                j["diameter"] = t.diameter;
                j["radius"] = t.radius;
                j["eccentricities"] = t.ecc;
                j["diametral_pair"] = {t.diametral_pair.first, t.diametral_pair.second};
                out << j.dump(2) << "\n";
            } else {
                out << "diameter " << t.diameter << " radius " << t.radius << "\n";
            }
            return 0;
        }
        if (c_chordal->parsed()) {
            DiameterResult r = diameter_chordal(g);
            return emit_diameter(out, file, "chordal-diameter", g, r, verify, as_json);
        }
        if (c_dom->parsed()) {
            DomTargetResult r = diameter_dominating_target(g, k_hint);
            return emit_diameter(out, file, "domtarget-diameter", g, r.diameter, verify, as_json);
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace extremal

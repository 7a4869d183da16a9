#include "cyfeyn/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <vector>

#include "cyfeyn/correlator.hpp"
#include "cyfeyn/errors.hpp"
#include "cyfeyn/manifest.hpp"
#include "cyfeyn/parallel.hpp"
#include "cyfeyn/stable_graph.hpp"
#include "cyfeyn/verify.hpp"

namespace cyfeyn {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Degrees reported in the invariant tables; the config's order floor keeps
// every extraction comfortably above this.
constexpr int kMaxDegree = 8;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Flat "key = JSON value" lines; '#' starts a comment.
std::map<std::string, json> parse_flat(std::istream& in) {
    std::map<std::string, json> entries;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineNo) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(lineNo) +
                              ": empty key or value");
        if (entries.count(key))
            throw ConfigError("config line " + std::to_string(lineNo) +
                              ": duplicate key " + key);
        try {
            entries[key] = json::parse(value);
        } catch (const json::exception&) {
            throw ConfigError("config line " + std::to_string(lineNo) +
                              ": value of " + key + " is not valid JSON");
        }
    }
    return entries;
}

Rat rat_from_json(const json& v) {
    if (v.is_string()) return rat_parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw ConfigError("rationals must be \"p/q\" strings or integers");
}

GenPoly x_poly_from(const json& value, const std::string& key) {
    if (!value.is_array())
        throw ConfigError(key + " must be an array of X-coefficients");
    GenPoly p;
    int d = 0;
    for (const auto& v : value) {
        const Rat c = rat_from_json(v);
        p = p + (d == 0 ? GenPoly::constant(c)
                        : GenPoly::constant(c) * GenPoly::variable(Var::X, d));
        ++d;
    }
    return p;
}

int parse_genus_key(const std::string& key) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("ambiguity keys must be genus numbers, got " + key);
    return std::stoi(key);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << content;
}

} // namespace

void RunConfig::validate() const {
    make_target(target); // UnsupportedTarget for anything outside {6, 8, 10}
    if (maxGenus < 0) throw ConfigError("maximum genus must be non-negative");
    if (order < 3 * maxGenus + 10)
        throw ConfigError("series order " + std::to_string(order) +
                          " is below the floor 3G+10 = " +
                          std::to_string(3 * maxGenus + 10));
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
    if (format != "json" && format != "csv")
        throw ConfigError("format must be json or csv");
    if (outDir.empty()) throw ConfigError("output directory must be set");
    gauge.validate();
    for (const auto& [g, amb] : ambiguity) {
        if (g < 2 || g > maxGenus)
            throw ConfigError("ambiguity genus " + std::to_string(g) +
                              " is outside 2.." + std::to_string(maxGenus));
        if (amb.g != g)
            throw ConfigError("ambiguity entry mislabeled: key " + std::to_string(g) +
                              " holds genus " + std::to_string(amb.g));
        amb.validate();
    }
}

Gauge parse_gauge_config(std::istream& in) {
    Gauge g;
    for (const auto& [key, value] : parse_flat(in)) {
        if (key == "c11") g.c11 = x_poly_from(value, key);
        else if (key == "c12") g.c12 = x_poly_from(value, key);
        else if (key == "c2") g.c2 = x_poly_from(value, key);
        else if (key == "c3") g.c3 = x_poly_from(value, key);
        else throw ConfigError("unknown gauge key " + key);
    }
    return g;
}

std::map<int, AmbiguitySpec> parse_ambiguity_config(std::istream& in) {
    std::map<int, AmbiguitySpec> out;
    for (const auto& [key, value] : parse_flat(in)) {
        const int g = parse_genus_key(key);
        if (value.is_string()) {
            if (value.get<std::string>() != "symbolic")
                throw ConfigError("genus " + key + ": the only string value is \"symbolic\"");
            out.emplace(g, AmbiguitySpec::unknowns(g));
        } else if (value.is_array()) {
            std::vector<Rat> v;
            for (const auto& entry : value) v.push_back(rat_from_json(entry));
            out.emplace(g, AmbiguitySpec::numeric(g, std::move(v)));
        } else {
            throw ConfigError("genus " + key +
                              ": expected an array of rationals or \"symbolic\"");
        }
    }
    return out;
}

std::map<int, AmbiguitySpec> ambiguity_shortcut(const std::string& word, int maxGenus) {
    if (word != "zero" && word != "symbolic")
        throw ConfigError("--ambiguity expects a file path, \"zero\" or \"symbolic\"");
    std::map<int, AmbiguitySpec> out;
    for (int g = 2; g <= maxGenus; ++g) {
        if (word == "zero")
            out.emplace(g, AmbiguitySpec::numeric(
                               g, std::vector<Rat>(static_cast<size_t>(3 * g - 3), Rat(0))));
        else
            out.emplace(g, AmbiguitySpec::unknowns(g));
    }
    return out;
}

int cmd_verify(const VerifyOptions& opt, const std::string& outDir, std::ostream& out) {
    const std::vector<CheckResult> results = run_identity_suite(opt);

    int failed = 0;
    json checks = json::array();
    for (const CheckResult& r : results) {
        out << (r.pass ? "ok   " : "FAIL ") << r.name;
        if (!r.pass) out << " - " << r.detail;
        out << "\n";
        if (!r.pass) ++failed;
        checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    const json report{{"target", opt.spec.k}, {"order", opt.order}, {"checks", checks}};
    fs::create_directories(outDir);
    write_file(fs::path(outDir) / "verify_report.json", report.dump(2) + "\n");

    if (failed == 0) {
        out << "verify: all " << results.size() << " checks passed\n";
        return 0;
    }
    out << "verify: " << failed << " check(s) failed\n";
    return 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    VerifyOptions opt;
    opt.spec = make_target(cfg.target);
    opt.order = cfg.order;
    opt.gauge = cfg.gauge;
    opt.jobs = cfg.jobs;
    return cmd_verify(opt, cfg.outDir, out);
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    const TargetSpec spec = make_target(cfg.target);
    CorrelatorTable table;
    table.set(1, 1, genus1_seed(spec));
    for (int g = 2; g <= cfg.maxGenus; ++g) {
        const auto it = cfg.ambiguity.find(g);
        if (it == cfg.ambiguity.end())
            throw ConfigError("genus " + std::to_string(g) +
                              " needs an ambiguity entry (3g-3 rationals or \"symbolic\")");
        solve_genus(g, it->second, cfg.gauge, spec, table, cfg.jobs);
    }

    Manifest m;
    m.target = cfg.target;
    m.order = cfg.order;
    m.maxGenus = cfg.maxGenus;
    m.gauge = cfg.gauge;
    m.ambiguity = cfg.ambiguity;
    m.correlators[{1, 1}] = poly_str(table.get(1, 1));
    for (int g = 2; g <= cfg.maxGenus; ++g)
        m.correlators[{g, 0}] = poly_str(table.get(g, 0));

    // Per-genus extraction is independent once the table is solved; genera
    // still carrying unknowns have no numeric invariants to report.
    std::vector<std::optional<InvariantReport>> slots(
        static_cast<size_t>(cfg.maxGenus) + 1);
    parallel_for(cfg.maxGenus + 1, cfg.jobs, [&](int g) {
        if (g >= 2 && table.get(g, 0).has_lambda()) return;
        slots[static_cast<size_t>(g)] =
            extract_invariants(g, spec, table, kMaxDegree, cfg.order);
    });
    for (int g = 0; g <= cfg.maxGenus; ++g)
        if (slots[static_cast<size_t>(g)])
            m.invariants.emplace(g, *slots[static_cast<size_t>(g)]);

    const fs::path dir(cfg.outDir);
    fs::create_directories(dir);
    write_file(dir / "manifest.json", manifest_to_json(m));
    for (int g = 2; g <= cfg.maxGenus; ++g) {
        const std::string text = poly_str(table.get(g, 0));
        write_file(dir / ("p_genus" + std::to_string(g) + ".txt"), text + "\n");
        out << "P_" << g << " = " << text << "\n";
    }
    for (const auto& [g, report] : m.invariants) {
        const std::string name = "invariants_g" + std::to_string(g) + "." + cfg.format;
        write_file(dir / name,
                   cfg.format == "csv" ? invariants_csv(report) : invariants_json(report));
    }
    out << "solve: wrote manifest.json and " << m.invariants.size()
        << " invariant table(s) to " << cfg.outDir << "\n";
    return 0;
}

int cmd_graphs(int g, int legs, std::ostream& out) {
    for (const StableGraph& G : enumerate(g, legs))
        out << graph_str(G) << "  |Aut| = " << aut_order(G) << "\n";
    return 0;
}

int run_guarded(const std::function<int()>& fn, std::ostream& err) {
    try {
        return fn();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cyfeyn

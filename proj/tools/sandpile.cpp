// Command line front end for the sandpile library: classify configurations,
// apply the operators, walk toppling classes, inspect framed path pairs,
// verify the cyclic partition, enumerate and render polyominoes, and run
// the built-in verification suite.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sandpile/bipartite.hpp"
#include "sandpile/complete_graph.hpp"
#include "sandpile/enumeration.hpp"
#include "sandpile/graph.hpp"
#include "sandpile/json_io.hpp"
#include "sandpile/operators.hpp"
#include "sandpile/paths.hpp"
#include "sandpile/render.hpp"
#include "sandpile/selftest.hpp"

namespace {

using nlohmann::json;
using namespace sandpile;

// Values for --graph/--config/... are inline JSON when they look like it,
// otherwise they name a file to read.
std::string load_payload(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open input file: " + arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Settings {
    int enum_bound = kEnumerationSizeBound;
    int cyclic_bound = kCyclicLemmaSizeBound;
    int threads = 1;
};

// Optional key=value settings file; '#' starts a comment.
Settings load_settings(const std::string& path) {
    Settings s;
    if (path.empty()) return s;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open settings file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        size_t eq = stripped.find('=');
        if (stripped.find_first_not_of(" \t") == std::string::npos) continue;
        if (eq == std::string::npos) {
            throw std::invalid_argument("settings line " + std::to_string(lineno) +
                                        " is not key=value");
        }
        auto trim = [](std::string t) {
            size_t a = t.find_first_not_of(" \t");
            size_t b = t.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
        };
        std::string key = trim(stripped.substr(0, eq));
        int value = std::stoi(trim(stripped.substr(eq + 1)));
        if (key == "enum_bound") {
            s.enum_bound = value;
        } else if (key == "cyclic_bound") {
            s.cyclic_bound = value;
        } else if (key == "threads") {
            s.threads = value;
        } else {
            throw std::invalid_argument("unknown settings key: " + key);
        }
    }
    return s;
}

int thread_budget(int requested) {
    if (const char* cap = std::getenv("SANDPILE_LAB_THREADS")) {
        int limit = std::atoi(cap);
        if (limit >= 1 && requested > limit) return limit;
    }
    return std::max(1, requested);
}

std::string classify_table(bool stable, bool recurrent, bool parking) {
    std::ostringstream out;
    out << "stable:    " << (stable ? "yes" : "no") << "\n"
        << "recurrent: " << (recurrent ? "yes" : "no") << "\n"
        << "parking:   " << (parking ? "yes" : "no") << "\n";
    return out.str();
}

json config_json(const Configuration& c) { return json::parse(to_json(c)); }
json bip_json(const SortedBipartiteConfig& c) { return json::parse(to_json(c)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sandpile operators, framed path pairs and polyomino enumeration"};
    app.require_subcommand(1);
    std::string settings_path;
    app.add_option("--settings", settings_path,
                   "key=value file with enum_bound, cyclic_bound, threads");

    // classify ------------------------------------------------------------
    auto* classify = app.add_subcommand("classify", "stability, recurrence and parking tests");
    std::string cl_graph, cl_config, cl_format = "json";
    classify->add_option("--graph", cl_graph, "graph JSON or file")->required();
    classify->add_option("--config", cl_config, "configuration JSON or file")->required();
    classify->add_option("--format", cl_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // apply ---------------------------------------------------------------
    auto* apply = app.add_subcommand("apply", "apply psi, phi or beta");
    std::string ap_graph, ap_config, ap_bip, ap_op, ap_to;
    bool ap_trace = false;
    int ap_scan_limit = kSubsetScanLimit;
    apply->add_option("--graph", ap_graph, "graph JSON or file");
    apply->add_option("--config", ap_config, "configuration JSON or file");
    apply->add_option("--bipartite", ap_bip, "sorted K_{m,n} configuration JSON or file");
    apply->add_option("--op", ap_op, "psi, phi, beta (general) or rho-beta (bipartite)")
        ->required()
        ->check(CLI::IsMember({"psi", "phi", "beta", "rho-beta"}));
    apply->add_option("--to", ap_to, "iterate to a fixed point: recurrent or parking")
        ->check(CLI::IsMember({"recurrent", "parking"}));
    apply->add_flag("--trace", ap_trace, "record the full trajectory");
    apply->add_option("--scan-limit", ap_scan_limit,
                      "cap on non-sink vertices for the general subset scan");

    // walk ----------------------------------------------------------------
    auto* walk = app.add_subcommand("walk", "the m sorted stable configurations of a class");
    std::string wk_bip, wk_format = "json";
    walk->add_option("--bipartite", wk_bip, "sorted K_{m,n} configuration JSON or file")
        ->required();
    walk->add_option("--format", wk_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // frame ---------------------------------------------------------------
    auto* frame = app.add_subcommand("frame", "measurements and jumps on framed path pairs");
    std::string fr_pair, fr_from_config, fr_jump;
    bool fr_intersections = false, fr_raw = false;
    std::optional<long long> fr_pos, fr_cumuled;
    frame->add_option("--pair", fr_pair, "framed pair JSON or file");
    frame->add_option("--from-config", fr_from_config,
                      "build the pair of a sorted stable K_{m,n} configuration");
    frame->add_flag("--intersections", fr_intersections, "list the m stable intersections");
    frame->add_flag("--raw", fr_raw, "report intersections in raw path coordinates");
    frame->add_option("--jump", fr_jump, "move the anchor: next (phi) or prev (psi)")
        ->check(CLI::IsMember({"next", "prev"}));
    frame->add_option("--pos", fr_pos, "relative position of the given east step");
    frame->add_option("--cumuledpos", fr_cumuled, "cumulated relative position at the given step");

    // cyclic-verify ---------------------------------------------------------
    auto* cyclic = app.add_subcommand("cyclic-verify", "check the cyclic partition of word pairs");
    int cy_m = 0, cy_n = 0;
    std::optional<long long> cy_sample;
    unsigned cy_seed = 1;
    cyclic->add_option("--m", cy_m, "east parameter")->required();
    cyclic->add_option("--n", cy_n, "north parameter")->required();
    cyclic->add_option("--sample", cy_sample, "check this many random pairs instead");
    cyclic->add_option("--seed", cy_seed, "seed for sampled mode");

    // enumerate -------------------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate", "list parallelogram polyominoes");
    int en_m = 0, en_n = 0, en_threads = 0;
    std::string en_pattern;
    bool en_count_only = false;
    enumerate->add_option("--m", en_m, "box width");
    enumerate->add_option("--n", en_n, "box height");
    enumerate->add_option("--pattern", en_pattern, "fix the lower path to this word");
    enumerate->add_flag("--count-only", en_count_only, "emit only the count");
    enumerate->add_option("--threads", en_threads, "fan out over upper words");

    // count -----------------------------------------------------------------
    auto* count = app.add_subcommand("count", "closed-form counts, optionally cross-checked");
    int co_m = 0, co_n = 0;
    std::vector<long long> co_simple, co_double;
    bool co_brute = false;
    count->add_option("--m", co_m, "box width");
    count->add_option("--n", co_n, "box height");
    count->add_option("--simple", co_simple, "a b c for lower path (E^a N^b)^c")->expected(3);
    count->add_option("--double", co_double, "a b c for lower path (E^a N^a E^b N^b)^c")
        ->expected(3);
    count->add_flag("--brute", co_brute, "cross-check by brute force");

    // kn ----------------------------------------------------------------
    auto* kn = app.add_subcommand("kn", "phi and psi on the complete graph");
    std::string kn_config, kn_op;
    bool kn_trace = false;
    kn->add_option("--config", kn_config, "complete-graph configuration JSON or file")
        ->required();
    kn->add_option("--op", kn_op, "phi or psi")->required()->check(CLI::IsMember({"phi", "psi"}));
    kn->add_flag("--trace", kn_trace, "include the K_{n,n} iterates");

    // render --------------------------------------------------------------
    auto* render = app.add_subcommand("render", "draw polyominoes and framed pairs");
    std::string rd_polyomino, rd_bip, rd_pair, rd_format = "ascii", rd_out;
    render->add_option("--polyomino", rd_polyomino, "polyomino JSON or file");
    render->add_option("--bipartite", rd_bip,
                       "draw the class polyomino of a sorted stable configuration");
    render->add_option("--pair", rd_pair, "draw a window of a framed pair around its anchor");
    render->add_option("--format", rd_format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", rd_out, "write to a file instead of stdout");
    render->description(
        "ASCII pictures use one text row per unit height with the origin at the bottom left; "
        "enclosed cells are '#', the bounding box is drawn as a '+-|' border, and framed-pair "
        "windows draw the two paths with '|'/'_' and ':'/'.' and mark the anchor 'o'.");

    // selftest ------------------------------------------------------------
    auto* selftest = app.add_subcommand("selftest", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::ostringstream message;
        message << e.what();
        std::cerr << "usage error: " << message.str() << "\n";
        return 2;
    }

    try {
        Settings settings = load_settings(settings_path);
        std::ostringstream out;

        if (*classify) {
            Graph g = graph_from_json(load_payload(cl_graph));
            Configuration c = configuration_from_json(load_payload(cl_config));
            bool stable = is_stable(g, c);
            bool recurrent = stable && is_recurrent(g, c);
            bool parking = stable && is_parking(g, c);
            if (cl_format == "table") {
                out << classify_table(stable, recurrent, parking);
            } else {
                json j;
                j["stable"] = stable;
                j["recurrent"] = recurrent;
                j["parking"] = parking;
                out << j.dump() << "\n";
            }
        } else if (*apply) {
            if (ap_bip.empty() == (ap_graph.empty() || ap_config.empty())) {
                throw std::invalid_argument(
                    "apply needs either --graph with --config, or --bipartite");
            }
            json j;
            if (!ap_bip.empty()) {
                SortedBipartiteConfig c = bipartite_from_json(load_payload(ap_bip));
                if (ap_op == "beta") {
                    throw std::invalid_argument(
                        "beta does not keep sorted parts sorted; use rho-beta");
                }
                if (!ap_to.empty()) {
                    auto step = ap_to == "recurrent" ? psi_kmn : phi_kmn;
                    std::vector<SortedBipartiteConfig> trail{c};
                    while (true) {
                        SortedBipartiteConfig next = step(trail.back());
                        if (next == trail.back()) break;
                        trail.push_back(next);
                    }
                    j["result"] = bip_json(trail.back());
                    j["steps"] = trail.size() - 1;
                    if (ap_trace) {
                        j["trajectory"] = json::array();
                        for (const auto& t : trail) j["trajectory"].push_back(bip_json(t));
                    }
                } else {
                    SortedBipartiteConfig result = ap_op == "psi"        ? psi_kmn(c)
                                                   : ap_op == "phi"     ? phi_kmn(c)
                                                                        : rho_beta(c);
                    j["result"] = bip_json(result);
                }
            } else {
                Graph g = graph_from_json(load_payload(ap_graph));
                Configuration c = configuration_from_json(load_payload(ap_config));
                if (ap_op == "rho-beta") {
                    throw std::invalid_argument("rho-beta applies to --bipartite inputs");
                }
                if (!ap_to.empty()) {
                    if (ap_op == "beta") throw std::invalid_argument("--to works with psi or phi");
                    NormalizeResult r = normalize(g, c,
                                                  ap_to == "recurrent" ? NormalizeTarget::Recurrent
                                                                       : NormalizeTarget::Parking,
                                                  ap_trace, ap_scan_limit);
                    j["result"] = config_json(r.fixed_point);
                    j["steps"] = r.steps;
                    if (ap_trace) {
                        j["trajectory"] = json::array();
                        for (const auto& t : r.trajectory) j["trajectory"].push_back(config_json(t));
                    }
                } else {
                    Configuration result = ap_op == "psi"   ? psi(g, c, ap_scan_limit)
                                           : ap_op == "phi" ? phi(g, c, ap_scan_limit)
                                                            : beta(g, c);
                    j["result"] = config_json(result);
                }
            }
            out << j.dump() << "\n";
        } else if (*walk) {
            SortedBipartiteConfig c = bipartite_from_json(load_payload(wk_bip));
            std::vector<SortedBipartiteConfig> configs = walk_class(c);
            if (wk_format == "table") {
                for (const auto& step : configs) {
                    out << "grade " << grade_kmn(step) << "  " << to_human(step) << "\n";
                }
            } else {
                json j;
                j["configs"] = json::array();
                j["grades"] = json::array();
                for (const auto& step : configs) {
                    j["configs"].push_back(bip_json(step));
                    j["grades"].push_back(grade_kmn(step));
                }
                out << j.dump() << "\n";
            }
        } else if (*frame) {
            if (fr_pair.empty() == fr_from_config.empty()) {
                throw std::invalid_argument("frame needs exactly one of --pair or --from-config");
            }
            FramedPair p = fr_pair.empty()
                               ? config_to_framed_pair(bipartite_from_json(load_payload(fr_from_config)))
                               : framed_pair_from_json(load_payload(fr_pair));
            if (!fr_jump.empty()) {
                p = jump(p, fr_jump == "next" ? JumpDirection::Next : JumpDirection::Prev);
            }
            json j;
            j["pair"] = json::parse(to_json(p));
            j["stable_intersection"] = is_stable_intersection(p);
            j["measurement"] = bip_json(measure_frame(p));
            if (fr_intersections) {
                j["intersections"] = json::array();
                for (GridPoint z : stable_intersections(p, !fr_raw)) {
                    j["intersections"].push_back({z.x, z.y});
                }
            }
            if (fr_pos) j["pos"] = pos(p, *fr_pos);
            if (fr_cumuled) j["cumuledpos"] = cumuledpos(p, *fr_cumuled);
            out << j.dump() << "\n";
        } else if (*cyclic) {
            CyclicLemmaReport report =
                verify_cyclic_lemma(cy_m, cy_n, cy_sample, settings.cyclic_bound, cy_seed);
            out << to_json(report) << "\n";
        } else if (*enumerate) {
            std::vector<Polyomino> found;
            if (!en_pattern.empty()) {
                found = enumerate_pattern(make_word(en_pattern), settings.enum_bound);
            } else {
                if (en_m < 1 || en_n < 1) {
                    throw std::invalid_argument("enumerate needs --m and --n, or --pattern");
                }
                int threads = thread_budget(en_threads > 0 ? en_threads : settings.threads);
                found = enumerate_polyominoes(en_m, en_n, settings.enum_bound, threads);
            }
            json j;
            j["count"] = found.size();
            if (!en_count_only) j["polyominoes"] = json::parse(to_json(found));
            out << j.dump() << "\n";
        } else if (*count) {
            int modes = (co_m > 0 || co_n > 0 ? 1 : 0) + (co_simple.empty() ? 0 : 1) +
                        (co_double.empty() ? 0 : 1);
            if (modes != 1) {
                throw std::invalid_argument("count needs exactly one of --m/--n, --simple, --double");
            }
            if (!co_simple.empty() || !co_double.empty()) {
                const auto& abc = co_simple.empty() ? co_double : co_simple;
                PatternKind kind = co_simple.empty() ? PatternKind::Double : PatternKind::Simple;
                BigInt formula = count_pattern_formula(abc[0], abc[1], abc[2], kind);
                std::optional<BigInt> brute;
                if (co_brute) {
                    std::string block =
                        kind == PatternKind::Simple
                            ? std::string(abc[0], 'E') + std::string(abc[1], 'N')
                            : std::string(abc[0], 'E') + std::string(abc[0], 'N') +
                                  std::string(abc[1], 'E') + std::string(abc[1], 'N');
                    std::string pattern;
                    for (long long i = 0; i < abc[2]; ++i) pattern += block;
                    brute = BigInt(enumerate_pattern(make_word(pattern), settings.enum_bound).size());
                }
                out << count_report_json(formula, brute,
                                         {{"a", abc[0]}, {"b", abc[1]}, {"c", abc[2]}})
                    << "\n";
            } else {
                if (co_m < 1 || co_n < 1) throw std::invalid_argument("count needs --m and --n");
                BigInt formula = count_polyominoes_formula(co_m, co_n);
                std::optional<BigInt> brute;
                if (co_brute) {
                    brute = BigInt(enumerate_polyominoes(co_m, co_n, settings.enum_bound,
                                                         thread_budget(settings.threads))
                                       .size());
                }
                out << count_report_json(formula, brute, {{"m", co_m}, {"n", co_n}}) << "\n";
            }
        } else if (*kn) {
            CompleteConfig v = complete_from_json(load_payload(kn_config));
            KnOperatorResult r = kn_op == "phi" ? phi_kn_trace(v) : psi_kn_trace(v);
            json j;
            j["result"] = json::parse(to_json(r.result));
            j["applications"] = r.applications;
            if (kn_trace) {
                j["iterates"] = json::array();
                for (const auto& step : r.iterates) j["iterates"].push_back(bip_json(step));
            }
            out << j.dump() << "\n";
        } else if (*render) {
            int sources = (rd_polyomino.empty() ? 0 : 1) + (rd_bip.empty() ? 0 : 1) +
                          (rd_pair.empty() ? 0 : 1);
            if (sources != 1) {
                throw std::invalid_argument(
                    "render needs exactly one of --polyomino, --bipartite, --pair");
            }
            std::string picture;
            if (!rd_pair.empty()) {
                if (rd_format == "svg") {
                    throw std::invalid_argument("framed-pair windows are ASCII only");
                }
                picture = render_framed_pair_ascii(framed_pair_from_json(load_payload(rd_pair)));
            } else {
                Polyomino p = rd_polyomino.empty()
                                  ? [&] {
                                        SortedBipartiteConfig c =
                                            bipartite_from_json(load_payload(rd_bip));
                                        FramedPair fp = config_to_framed_pair(c);
                                        return polyomino_of_part(fp.upper(), fp.lower());
                                    }()
                                  : polyomino_from_json(load_payload(rd_polyomino));
                picture = rd_format == "svg" ? render_polyomino_svg(p) : render_polyomino_ascii(p);
            }
            if (!rd_out.empty()) {
                std::ofstream file(rd_out);
                if (!file) throw std::invalid_argument("cannot write " + rd_out);
                file << picture;
            } else {
                out << picture;
            }
        } else if (*selftest) {
            bool ok = sandpile::selftest::run_all(std::cout);
            return ok ? 0 : 1;
        }

        std::cout << out.str();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

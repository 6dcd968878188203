#include "sandpile/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace sandpile {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed input: ") + e.what());
    }
}

json big_to_json(const BigInt& value) {
    if (value >= 0 && value <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
        return value.convert_to<std::uint64_t>();
    }
    return value.str();
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace

std::string to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    j["sink"] = g.sink();
    j["edges"] = json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
    return dump(j);
}

Graph graph_from_json(const std::string& text) {
    return guarded([&] {
        json j = parse(text);
        int vertices = j.at("vertices").get<int>();
        int sink = j.value("sink", vertices);
        if (sink != vertices) {
            throw std::invalid_argument("the sink must be the highest vertex index");
        }
        std::vector<std::pair<int, int>> edges;
        for (const json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("edges must be [a, b] pairs");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(vertices, edges);
    });
}

std::string to_json(const Configuration& c) {
    json j;
    j["heights"] = c.heights;
    return dump(j);
}

Configuration configuration_from_json(const std::string& text) {
    return guarded([&] {
        json j = parse(text);
        return Configuration(j.at("heights").get<std::vector<int>>());
    });
}

std::string to_json(const SortedBipartiteConfig& c) {
    json j;
    j["m"] = c.m;
    j["n"] = c.n;
    j["nonsink"] = c.nonsink;
    j["sinkpart"] = c.sinkpart;
    return dump(j);
}

SortedBipartiteConfig bipartite_from_json(const std::string& text) {
    return guarded([&] {
        json j = parse(text);
        return make_sorted_bipartite(j.at("m").get<int>(), j.at("n").get<int>(),
                                     j.at("nonsink").get<std::vector<int>>(),
                                     j.at("sinkpart").get<std::vector<int>>());
    });
}

std::string to_json(const FramedPair& p) {
    json j;
    j["upper"] = p.upper().letters;
    j["lower"] = p.lower().letters;
    j["anchor"] = {p.anchor().x, p.anchor().y};
    return dump(j);
}

FramedPair framed_pair_from_json(const std::string& text) {
    return guarded([&] {
        json j = parse(text);
        GridPoint anchor{0, 0};
        if (j.contains("anchor")) {
            const json& a = j.at("anchor");
            if (!a.is_array() || a.size() != 2) {
                throw std::invalid_argument("anchor must be [x, y]");
            }
            anchor = {a[0].get<long long>(), a[1].get<long long>()};
        }
        return FramedPair(make_word(j.at("upper").get<std::string>()),
                          make_word(j.at("lower").get<std::string>()), anchor);
    });
}

std::string to_json(const CompleteConfig& v) {
    json j;
    j["n"] = v.n;
    j["heights"] = v.heights;
    return dump(j);
}

CompleteConfig complete_from_json(const std::string& text) {
    return guarded([&] {
        json j = parse(text);
        return make_complete_config(j.at("n").get<int>(), j.at("heights").get<std::vector<int>>());
    });
}

std::string to_json(const Polyomino& p) {
    json j;
    j["upper"] = p.upper.letters;
    j["lower"] = p.lower.letters;
    return dump(j);
}

Polyomino polyomino_from_json(const std::string& text) {
    return guarded([&] {
        json j = parse(text);
        return make_polyomino(make_word(j.at("upper").get<std::string>()),
                              make_word(j.at("lower").get<std::string>()));
    });
}

std::string to_json(const std::vector<Polyomino>& ps) {
    json j = json::array();
    for (const Polyomino& p : ps) {
        json e;
        e["upper"] = p.upper.letters;
        e["lower"] = p.lower.letters;
        j.push_back(e);
    }
    return dump(j);
}

std::string to_json(const CyclicLemmaReport& r) {
    json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["exhaustive"] = r.exhaustive;
    j["pairs_checked"] = r.pairs_checked;
    if (r.exhaustive) j["parts"] = r.parts;
    j["all_parts_size_m"] = r.all_parts_size_m;
    j["one_polyomino_per_part"] = r.one_polyomino_per_part;
    j["reflexive"] = r.reflexive;
    j["partition_consistent"] = r.partition_consistent;
    if (r.exhaustive) j["count_matches_formula"] = r.count_matches_formula;
    j["ok"] = r.ok;
    return dump(j);
}

std::string count_report_json(const BigInt& formula, const std::optional<BigInt>& brute,
                              const std::vector<std::pair<std::string, long long>>& params) {
    json j;
    for (const auto& [key, value] : params) j[key] = value;
    j["formula"] = big_to_json(formula);
    if (brute) {
        j["brute"] = big_to_json(*brute);
        j["agree"] = (*brute == formula);
    }
    return dump(j);
}

std::string to_human(const Configuration& c) {
    std::ostringstream out;
    out << "(";
    for (int h : c.heights) out << h << ", ";
    out << "*)";
    return out.str();
}

std::string to_human(const SortedBipartiteConfig& c) {
    std::ostringstream out;
    out << "{";
    for (int i = 0; i < c.n; ++i) out << (i ? "," : "") << c.nonsink[i];
    out << " | ";
    for (int i = 0; i < c.m - 1; ++i) out << (i ? "," : "") << c.sinkpart[i];
    out << " | *}";
    return out.str();
}

}  // namespace sandpile

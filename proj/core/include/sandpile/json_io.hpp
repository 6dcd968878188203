#pragma once

#include <string>
#include <vector>

#include "sandpile/bipartite.hpp"
#include "sandpile/complete_graph.hpp"
#include "sandpile/enumeration.hpp"
#include "sandpile/graph.hpp"
#include "sandpile/paths.hpp"

namespace sandpile {

// JSON text interfaces. Serialization is deterministic: object keys are
// emitted in sorted order and collections keep their documented ordering.
// Parsers throw std::invalid_argument with a line-free message on malformed
// input.
//
// Formats:
//   graph          {"edges":[[1,2],..],"sink":7,"vertices":7}
//   configuration  {"heights":[0,0,2,0,2,2]}
//   bipartite      {"m":4,"n":6,"nonsink":[1,2,2,3,3,3],"sinkpart":[0,3,5]}
//   framed pair    {"anchor":[0,0],"lower":"NNNEENENN","upper":"ENNENENN"}
//   complete       {"heights":[0,2,2,3],"n":5}
//   polyomino      {"lower":"EENN","upper":"NNEE"}

std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string to_json(const Configuration& c);
Configuration configuration_from_json(const std::string& text);

std::string to_json(const SortedBipartiteConfig& c);
SortedBipartiteConfig bipartite_from_json(const std::string& text);

std::string to_json(const FramedPair& p);
FramedPair framed_pair_from_json(const std::string& text);

std::string to_json(const CompleteConfig& v);
CompleteConfig complete_from_json(const std::string& text);

std::string to_json(const Polyomino& p);
Polyomino polyomino_from_json(const std::string& text);

std::string to_json(const std::vector<Polyomino>& ps);
std::string to_json(const CyclicLemmaReport& r);

/// {"agree":true,"brute":3,"formula":3,..} with the brute field omitted when
/// absent. Counts that exceed 64 bits are emitted as decimal strings.
std::string count_report_json(const BigInt& formula, const std::optional<BigInt>& brute,
                              const std::vector<std::pair<std::string, long long>>& params);

/// Human-readable forms: "(1, 1, 0, 0, 2, 2, *)" and
/// "{1,2,2,3,3,3 | 0,3,5 | *}".
std::string to_human(const Configuration& c);
std::string to_human(const SortedBipartiteConfig& c);

}  // namespace sandpile

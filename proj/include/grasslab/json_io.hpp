#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grasslab/base_subset.hpp"
#include "grasslab/involution.hpp"
#include "grasslab/lifting.hpp"
#include "grasslab/oracle.hpp"
#include "grasslab/overlap_counts.hpp"
#include "grasslab/reconstruct.hpp"

namespace grasslab {

/// Keys keep insertion order, so every document is byte-stable.
using Json = nlohmann::ordered_json;

// Readers throw BadInput on malformed documents, including entries that are
// not reduced residues and bases whose rank differs from the stated dim.

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json to_json(const CompPair& a);
CompPair pair_from_json(const Json& j);

/// Array of line subspaces.
Json to_json(const Frame& frame);
Json to_json(const BaseSubset& base);

Json to_json(const InducerReport& r);
Json to_json(const TwoLayerOverlapReport& r);
Json to_json(const LayerOverlapReport& r);
Json to_json(const CommutativityReport& r);
Json to_json(const LiftingReport& r);
Json to_json(const CrosswiseWitness& w);
Json to_json(const SweepVerdict& v);

struct MapFile {
  LayerParams params;
  std::vector<std::pair<CompPair, CompPair>> entries;
  bool total = true;
};

Json to_json(const MapFile& file);
MapFile map_file_from_json(const Json& j);
MapOracle load_map_oracle(const MapFile& file);

/// Parses text, turning syntax errors into BadInput.
Json parse_json(const std::string& text);

/// 16 hex digits of an FNV-1a hash of the pair's JSON; stable across runs.
std::string pair_label(const CompPair& a);

/// Undirected graph, one node per pair labelled by pair_label.
std::string to_dot(const CommutativityGraph& g);
/// {"vertices": [label...], "adjacency": [[index...]...]}.
Json adjacency_json(const CommutativityGraph& g);

}  // namespace grasslab

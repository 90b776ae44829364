#pragma once

#include <string>

#include "clutterlab/clutter.hpp"
#include "clutterlab/families.hpp"
#include "clutterlab/ideal.hpp"

namespace clutterlab {

// JSON interchange. Formats:
//   graph:        {"n": int, "edges": [[u,v],...], "labels": [str,...]?}
//   clutter:      {"n": int, "d": int, "edges": [[...],...]}
//   certificate:  {"source_hash": hex, "steps": [[...],...]}
//   ideal:        {"n": int, "gens": [[e0,...,e_{n-1}],...]}
//   decomposition:{"skeleton": graph, "pieces": [{"edge":[u,v],
//                  "kind":"chordal"|"cycle", "vertices":[...], "size"?:int}]}
// Loaders validate and throw std::invalid_argument on malformed input;
// duplicate or reversed edges are rejected.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string clutter_to_json(const Clutter& c);
Clutter clutter_from_json(const std::string& text);

std::string certificate_to_json(const Clutter& source, const EliminationCertificate& cert);
/// Rejects certificates whose source hash disagrees with `source`.
EliminationCertificate certificate_from_json(const Clutter& source, const std::string& text);

std::string ideal_to_json(const MonomialIdeal& i);
MonomialIdeal ideal_from_json(const std::string& text);

std::string decomposition_to_json(const CactusDecomposition& d);
/// host_n: ground-set size the piece vertex lists refer to (taken from the
/// lists themselves when absent).
CactusDecomposition decomposition_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string hash_hex(uint64_t h);

}  // namespace clutterlab

#ifndef RABKIT_IO_HPP
#define RABKIT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "rabkit/automorphism.hpp"
#include "rabkit/blowup.hpp"
#include "rabkit/building.hpp"
#include "rabkit/chamber_graph.hpp"
#include "rabkit/graph.hpp"
#include "rabkit/rigidity.hpp"

// JSON and DOT text formats. Every reader throws ParseError on malformed input.
// JSON writers return compact documents with keys in a fixed order.

namespace rab {

/// {"vertices": ["a", ...], "edges": [["a", "b"], ...]}
SimplicialGraph graph_from_json(const std::string& text);
std::string graph_to_json(const SimplicialGraph& g);
std::string graph_to_dot(const SimplicialGraph& g);

/// {"a": {"kind": "FiniteCyclic", "q": 3}, "b": {"kind": "InfiniteCyclic"},
///  "c": {"kind": "TwoEnded", "n": 2}}, one entry per vertex of g.
std::vector<VertexGroupSpec> specs_from_json(const std::string& text, const SimplicialGraph& g);
std::string specs_to_json(const Presentation& pres);

/// Chambers as words, edges as {"a", "b", "type", "gate"} with chamber indices.
std::string ball_to_json(const Building& b, const Ball& ball);
/// Edges coloured by panel type.
std::string ball_to_dot(const Building& b, const Ball& ball);

std::string plain_graph_to_json(const PlainGraph& g);
std::string plain_graph_to_dot(const PlainGraph& g, const std::string& name = "G");

/// Per-edge type names and the diagram permutation matching the ground truth, if any.
std::string decoration_to_json(const TypedDecoration& d, const PlainGraph& g, const SimplicialGraph& gamma,
                               const std::optional<Permutation>& diagram);

/// {"perm": [...]} for finite types, {"eps": e, "shift": b} for Z, both for Z/n x Z.
LocalPerm local_perm_from_json(const std::string& text);
std::string local_perm_to_json(const LocalPerm& p);

/// Array of tagged generators, leftmost acting last:
///   {"translation": "s^2 t"}
///   {"tree_wall": {"gate": "s t", "type": "s", "f": {...}}}
///   {"diagram": ["t", "s", ...]}   (image name of each vertex in order)
BuildingAutomorphism automorphism_from_json(const Building& b, const std::string& text);
std::string automorphism_to_json(const BuildingAutomorphism& g);

std::string envelope_to_json(const EnvelopeDescriptor& d);

}  // namespace rab

#endif  // RABKIT_IO_HPP

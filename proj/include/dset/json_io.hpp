#ifndef DSET_JSON_IO_HPP
#define DSET_JSON_IO_HPP

#include "dset/catalog.hpp"
#include "dset/convergence.hpp"
#include "dset/index_set.hpp"
#include "dset/lftrees.hpp"
#include "dset/ordinal.hpp"
#include "dset/point_set.hpp"
#include "dset/rank.hpp"
#include "dset/tree.hpp"

#include <json.hpp>

namespace dset {

using Json = nlohmann::ordered_json;

// Readers throw DomainError("bad json") on shape errors; the CLI reports those
// as usage errors.
Json ordinal_to_json(const Ordinal& o);
Ordinal ordinal_from_json(const Json& j);

Json rational_to_json(const Rational& q);  // "p/q" or "p"
Rational rational_from_json(const Json& j);

Json point_to_json(const Point& p);  // {"prefix": "...", "period": "..."}
Point point_from_json(const Json& j);

Json fintree_to_json(const FinTree& t);  // sorted list of integer arrays
FinTree fintree_from_json(const Json& j);
Json node_to_json(const Node& n);
Json monotone_map_to_json(const MonotoneMap& m);  // [[from, to], ...]

Json schema_to_json(const TreeSchema& t);
SchemaPtr schema_from_json(const Json& j);

Json index_set_to_json(const IndexSet& l);
IndexSet index_set_from_json(const Json& j);

Json symbolic_fn_to_json(const SymbolicFn& f);
SymbolicFn symbolic_fn_from_json(const Json& j);

Json sequence_to_json(const DenseSequence& s);
DenseSequence sequence_from_json(const Json& j);

Json point_set_to_json(const PointSet& a);
PointSet point_set_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

Json compact_to_json(const Compact& k);
Compact compact_from_json(const Json& j);

Json lfnode_to_json(const LfNode& n);
LfNode lfnode_from_json(const Json& j);

// Wraps a payload as {"schema": "v1", ...}.
Json document(Json payload);
Json error_json(const std::string& code, const std::string& detail);

}  // namespace dset

#endif

#pragma once

#include <string>

#include "minorkit/domatic.hpp"
#include "minorkit/formats.hpp"
#include "minorkit/model.hpp"
#include "minorkit/paths.hpp"
#include "minorkit/reductions.hpp"

namespace minorkit {

// Line-oriented witness and mapping formats.  Every file starts with a
// "type <name>" line; vertex lists are space-separated sorted ids.  Parsers
// throw ParseError on malformed input.

// type clique_minor / h <h> / one "set <ids...>" line per branch set
std::string format_minor_model(const MinorModel & model);
MinorModel parse_minor_model(const std::string & text);

// type domatic / d <d> / one "set <ids...>" line per dominating set
std::string format_domatic_family(const DomaticFamily & fam);
DomaticFamily parse_domatic_family(const std::string & text);

// type paths / k <k> / one "path <ids...>" line per terminal pair, in order
std::string format_path_set(const PathSet & ps);
PathSet parse_path_set(const std::string & text);

// type layered_labeling / n / d / h / one "label <vertex> <T../M../B..>" line
// per target vertex
std::string format_labeling(const ReductionLabeling & lab);
ReductionLabeling parse_labeling(const std::string & text);

// type paths_map / n / k / h / "clique <ids...>" / one "pair <s> <t>" per pair
std::string format_paths_map(const PathsReductionMap & map);
PathsReductionMap parse_paths_map(const std::string & text);

// Edge-list graph followed by one "d <s> <t>" line per terminal pair.
std::string format_paths_instance(const DisjointPathsInstance & inst);
DisjointPathsInstance parse_paths_instance(const std::string & text);

} // namespace minorkit

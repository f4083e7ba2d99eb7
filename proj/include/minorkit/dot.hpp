#pragma once

#include <string>

#include "minorkit/model.hpp"
#include "minorkit/reductions.hpp"

namespace minorkit {

// Renders g in DOT format.  With a labeling, vertices carry their layer tag
// and each layer forms one same-rank row.  With a model, each branch set is
// filled with its own color.  Throws std::invalid_argument when the labeling
// size or the model does not fit g.
std::string emit_dot(const Graph & g, const ReductionLabeling * labeling = nullptr,
                     const MinorModel * model = nullptr);

} // namespace minorkit

#pragma once

#include <string>

#include "ncc/constraint.hpp"
#include "ncc/markov.hpp"

namespace ncc::io {

/// Constraint text format: one forbidden word per line over '0'/'1'; blank
/// lines and '#' comments ignored.
FiniteTypeConstraint read_constraint(const std::string& path);
FiniteTypeConstraint parse_constraint(const std::string& text);

/// Chain file: JSON with fields order, contexts (binary strings), kernel
/// (two probabilities per context, exact zeros written as 0).
MarkovChain read_chain(const std::string& path);
MarkovChain parse_chain(const std::string& text);
std::string chain_to_json(const MarkovChain& chain);
void write_chain(const MarkovChain& chain, const std::string& path);

}  // namespace ncc::io

#pragma once

#include <string>

#include "dhero/io.hpp"

namespace dhero::cli {

/// A digraph named on the command line: `k1`, `c3`, `r5`, `delta122`,
/// `tt:N`, `edgeless:N`, or a path to a .dg file. Built-in tournaments come
/// with singleton parts in index order.
DigraphFile digraph_arg(const std::string& spec);

}  // namespace dhero::cli

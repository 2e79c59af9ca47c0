#ifndef FGA_FGA_HPP
#define FGA_FGA_HPP

// Umbrella header for the flow-graph arithmetic library.

#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"
#include "fga/isomorphism.hpp"
#include "fga/format.hpp"
#include "fga/st_paths.hpp"
#include "fga/algebra.hpp"
#include "fga/enumerate.hpp"
#include "fga/decomposition.hpp"
#include "fga/order.hpp"
#include "fga/division.hpp"
#include "fga/laws.hpp"

#endif  // FGA_FGA_HPP

#pragma once

#include "arrowing.hpp"
#include "coloring.hpp"
#include "determiner.hpp"
#include "distinguisher.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "factor_extremal.hpp"
#include "factors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "hypergraph.hpp"
#include "matching.hpp"
#include "properties.hpp"
#include "recolor.hpp"
#include "subgraph.hpp"
#include "trees.hpp"

#pragma once

#include "injcol/error.hpp"
#include "injcol/generators.hpp"
#include "injcol/genus.hpp"
#include "injcol/graph.hpp"
#include "injcol/hypergraph.hpp"
#include "injcol/injective.hpp"
#include "injcol/io.hpp"
#include "injcol/oracles.hpp"
#include "injcol/oriented.hpp"
#include "injcol/random.hpp"
#include "injcol/separating_family.hpp"

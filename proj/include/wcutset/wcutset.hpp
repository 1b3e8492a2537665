#pragma once

#include "wcutset/bench.hpp"
#include "wcutset/bitset.hpp"
#include "wcutset/cutset.hpp"
#include "wcutset/cutset_types.hpp"
#include "wcutset/errors.hpp"
#include "wcutset/exact.hpp"
#include "wcutset/graph.hpp"
#include "wcutset/io.hpp"
#include "wcutset/sequence.hpp"
#include "wcutset/smc.hpp"
#include "wcutset/tree_decomposition.hpp"

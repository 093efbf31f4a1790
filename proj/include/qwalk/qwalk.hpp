#pragma once

// Continuous-time quantum walk analysis: weighted graphs, exact spectral
// classification, state-transfer certification, equitable partitions, and
// isomorphic-branch constructions.

#include "qwalk/algebraic.hpp"
#include "qwalk/branch.hpp"
#include "qwalk/catalog.hpp"
#include "qwalk/charpoly.hpp"
#include "qwalk/families.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/io.hpp"
#include "qwalk/numeric.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/predicates.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/states.hpp"
#include "qwalk/sweeps.hpp"
#include "qwalk/transfer.hpp"
#include "qwalk/util.hpp"

#pragma once

// Umbrella header.

#include "pvc/branch_state.hpp"
#include "pvc/branching.hpp"
#include "pvc/core.hpp"
#include "pvc/engines.hpp"
#include "pvc/fptas.hpp"
#include "pvc/generators.hpp"
#include "pvc/io.hpp"
#include "pvc/kernel.hpp"
#include "pvc/ksolvers.hpp"
#include "pvc/lp.hpp"
#include "pvc/oracle.hpp"
#include "pvc/rational.hpp"
#include "pvc/tree_decomposition.hpp"
#include "pvc/treewidth_dp.hpp"
#include "pvc/vc_solver.hpp"

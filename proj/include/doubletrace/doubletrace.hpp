#pragma once

// Umbrella header.

#include "doubletrace/braid.hpp"
#include "doubletrace/catalog.hpp"
#include "doubletrace/common.hpp"
#include "doubletrace/double_rep.hpp"
#include "doubletrace/group.hpp"
#include "doubletrace/invariants.hpp"
#include "doubletrace/json_io.hpp"
#include "doubletrace/perm_similarity.hpp"
#include "doubletrace/permutation.hpp"
#include "doubletrace/presentation.hpp"

#pragma once

// Umbrella header: finite permutation groups, Fitting-class machinery and
// injector computation with an exhaustive verification harness.

#include "permfit/catalog.hpp"
#include "permfit/class_expr.hpp"
#include "permfit/class_parse.hpp"
#include "permfit/config.hpp"
#include "permfit/errors.hpp"
#include "permfit/group_io.hpp"
#include "permfit/hfunction.hpp"
#include "permfit/index_set.hpp"
#include "permfit/injectors.hpp"
#include "permfit/lattice.hpp"
#include "permfit/perm.hpp"
#include "permfit/perm_group.hpp"
#include "permfit/prime_set.hpp"
#include "permfit/report.hpp"
#include "permfit/suites.hpp"

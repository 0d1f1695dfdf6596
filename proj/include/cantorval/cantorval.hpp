#pragma once

// Umbrella header: exact construction and classification of difference
// sets of central Cantor sets.

#include "cantorval/achievement.hpp"
#include "cantorval/classify.hpp"
#include "cantorval/conditions.hpp"
#include "cantorval/gapcalc.hpp"
#include "cantorval/geometry.hpp"
#include "cantorval/oracle.hpp"
#include "cantorval/params.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/json_io.hpp"
#include "cantorval/region.hpp"
#include "cantorval/verify.hpp"

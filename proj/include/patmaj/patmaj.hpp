#pragma once

#include "patmaj/arith.hpp"
#include "patmaj/asymptotics.hpp"
#include "patmaj/containment.hpp"
#include "patmaj/decomposition.hpp"
#include "patmaj/enumeration.hpp"
#include "patmaj/error.hpp"
#include "patmaj/io.hpp"
#include "patmaj/monotonicity.hpp"
#include "patmaj/pattern_set.hpp"
#include "patmaj/permutation.hpp"
#include "patmaj/polynomial.hpp"

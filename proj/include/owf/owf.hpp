#pragma once

// Umbrella header for the whole library.

#include "owf/advisor.hpp"
#include "owf/construct/blowup.hpp"
#include "owf/construct/circulant.hpp"
#include "owf/construct/compose.hpp"
#include "owf/construct/haggkvist.hpp"
#include "owf/construct/projection.hpp"
#include "owf/construct/rsm.hpp"
#include "owf/construct/walecki.hpp"
#include "owf/corpus.hpp"
#include "owf/cycle_type.hpp"
#include "owf/error.hpp"
#include "owf/factor.hpp"
#include "owf/graph.hpp"
#include "owf/group.hpp"
#include "owf/io.hpp"
#include "owf/search/budget.hpp"
#include "owf/search/hamdecomp.hpp"
#include "owf/search/rsm_search.hpp"
#include "owf/search/solve.hpp"
#include "owf/search/starter_search.hpp"
#include "owf/starter.hpp"
#include "owf/verify.hpp"

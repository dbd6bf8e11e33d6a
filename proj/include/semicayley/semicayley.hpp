#pragma once

#include "semicayley/abelian_group.hpp"
#include "semicayley/aut_search.hpp"
#include "semicayley/errors.hpp"
#include "semicayley/golden.hpp"
#include "semicayley/graph.hpp"
#include "semicayley/parse.hpp"
#include "semicayley/perm_group.hpp"
#include "semicayley/permutation.hpp"
#include "semicayley/sc_theory.hpp"
#include "semicayley/sweep.hpp"

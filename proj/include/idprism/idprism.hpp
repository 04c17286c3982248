#ifndef IDPRISM_IDPRISM_HPP
#define IDPRISM_IDPRISM_HPP

#include "idprism/bitset.hpp"
#include "idprism/cliquewidth.hpp"
#include "idprism/cycle_prism.hpp"
#include "idprism/graph.hpp"
#include "idprism/idcode.hpp"
#include "idprism/io.hpp"
#include "idprism/rational.hpp"
#include "idprism/solver.hpp"

#endif

#pragma once

#include "distcol/bounds.hpp"
#include "distcol/claims.hpp"
#include "distcol/colouring.hpp"
#include "distcol/constructions.hpp"
#include "distcol/family.hpp"
#include "distcol/graph.hpp"
#include "distcol/io.hpp"
#include "distcol/solver.hpp"
#include "distcol/structure.hpp"

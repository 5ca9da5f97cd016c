#pragma once

#include "liecas/bialgebra.hpp"
#include "liecas/cohomology.hpp"
#include "liecas/decomposition.hpp"
#include "liecas/deformation.hpp"
#include "liecas/error.hpp"
#include "liecas/hopf.hpp"
#include "liecas/lie_algebra.hpp"
#include "liecas/linalg.hpp"
#include "liecas/scalar.hpp"
#include "liecas/verdict.hpp"

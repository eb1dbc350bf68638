#pragma once

#include "trilie/algebra.hpp"
#include "trilie/cochain.hpp"
#include "trilie/cohomology.hpp"
#include "trilie/deformation.hpp"
#include "trilie/error.hpp"
#include "trilie/matrix.hpp"
#include "trilie/nr_bracket.hpp"
#include "trilie/pair_basis.hpp"
#include "trilie/rational.hpp"
#include "trilie/representation.hpp"
#include "trilie/subspace.hpp"

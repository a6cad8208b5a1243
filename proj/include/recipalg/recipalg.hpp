#pragma once

// Umbrella header for the recipalg library: combinatorial invariants of
// hyperplane arrangements and the graded structure of the algebra generated
// by reciprocals of the defining linear forms.

#include "recipalg/arrangement.hpp"
#include "recipalg/errors.hpp"
#include "recipalg/families.hpp"
#include "recipalg/jk.hpp"
#include "recipalg/lattice.hpp"
#include "recipalg/matrix.hpp"
#include "recipalg/multipoly.hpp"
#include "recipalg/nbc.hpp"
#include "recipalg/oracle.hpp"
#include "recipalg/parse.hpp"
#include "recipalg/rational.hpp"
#include "recipalg/series.hpp"
#include "recipalg/univariate.hpp"

#pragma once

// Umbrella header for the frack library: special functions of the
// Mittag-Leffler / Wright / Fox H family, grid-based fractional calculus
// operators, closed-form fractional kinetic and diffusion solvers, numeric
// transform tools, tabulated-output plumbing, and the named verification
// registry.  Include individual headers instead when compile time matters.

#include "frack/errors.hpp"
#include "frack/gamma.hpp"
#include "frack/quadrature.hpp"
#include "frack/contour.hpp"
#include "frack/mittag_leffler.hpp"
#include "frack/wright.hpp"
#include "frack/h_function.hpp"
#include "frack/fractional_calculus.hpp"
#include "frack/solution_table.hpp"
#include "frack/transforms.hpp"
#include "frack/kinetic.hpp"
#include "frack/diffusion.hpp"
#include "frack/verify.hpp"

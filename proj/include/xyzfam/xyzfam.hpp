#pragma once

// Everything except the command-line front end (xyzfam/cli.hpp).

#include "xyzfam/exact/errors.hpp"
#include "xyzfam/exact/poly_algebra.hpp"
#include "xyzfam/exact/polynomial.hpp"
#include "xyzfam/exact/rational.hpp"
#include "xyzfam/exact/rational_function.hpp"
#include "xyzfam/exact/text.hpp"

#include "xyzfam/curve/quartic.hpp"
#include "xyzfam/curve/torsion.hpp"
#include "xyzfam/curve/weierstrass.hpp"

#include "xyzfam/families/ansatz.hpp"
#include "xyzfam/families/families.hpp"

#include "xyzfam/search/search.hpp"
#include "xyzfam/search/table.hpp"

#pragma once

// Everything except the JSON layer (g2lat/io.hpp), which needs json.hpp on
// the include path.

#include "g2lat/base_field.hpp"
#include "g2lat/building.hpp"
#include "g2lat/errors.hpp"
#include "g2lat/gram.hpp"
#include "g2lat/groups.hpp"
#include "g2lat/identities.hpp"
#include "g2lat/isotropic.hpp"
#include "g2lat/jet.hpp"
#include "g2lat/lattice.hpp"
#include "g2lat/matrix.hpp"
#include "g2lat/octonion.hpp"
#include "g2lat/polynomial.hpp"
#include "g2lat/reduction.hpp"
#include "g2lat/scalar.hpp"

#pragma once

#include "invpoly/arith.hpp"
#include "invpoly/burnside.hpp"
#include "invpoly/coxeter.hpp"
#include "invpoly/duality.hpp"
#include "invpoly/error.hpp"
#include "invpoly/intpoly.hpp"
#include "invpoly/io.hpp"
#include "invpoly/matrix.hpp"
#include "invpoly/monodromy.hpp"
#include "invpoly/orbifold.hpp"
#include "invpoly/polycore.hpp"
#include "invpoly/symmetry.hpp"

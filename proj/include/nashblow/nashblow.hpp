#pragma once

#include "nashblow/rational.hpp"
#include "nashblow/monomial.hpp"
#include "nashblow/polynomial.hpp"
#include "nashblow/parse.hpp"
#include "nashblow/groebner.hpp"
#include "nashblow/context.hpp"
#include "nashblow/ideal.hpp"
#include "nashblow/determinant.hpp"
#include "nashblow/variety.hpp"
#include "nashblow/jideal.hpp"
#include "nashblow/checks.hpp"

// problem.hpp and report.hpp are left out: they need nlohmann_json

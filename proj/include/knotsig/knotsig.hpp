#pragma once

#include "knotsig/error.hpp"
#include "knotsig/rational.hpp"
#include "knotsig/quad_field.hpp"
#include "knotsig/polynomial.hpp"
#include "knotsig/hermitian.hpp"
#include "knotsig/sturm.hpp"
#include "knotsig/seifert.hpp"
#include "knotsig/circle.hpp"
#include "knotsig/invariants.hpp"
#include "knotsig/pretzel.hpp"

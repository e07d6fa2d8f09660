#pragma once

#include "stacky/bignum.hpp"
#include "stacky/cohomology.hpp"
#include "stacky/counting.hpp"
#include "stacky/error.hpp"
#include "stacky/field.hpp"
#include "stacky/poly.hpp"
#include "stacky/zeta.hpp"

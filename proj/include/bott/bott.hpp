#pragma once

// Umbrella header for the whole library.

#include "bott/curve.hpp"
#include "bott/divisor.hpp"
#include "bott/errors.hpp"
#include "bott/integers.hpp"
#include "bott/oracle.hpp"
#include "bott/point.hpp"
#include "bott/seshadri.hpp"
#include "bott/tower.hpp"

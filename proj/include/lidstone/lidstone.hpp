#pragma once

#include "lidstone/constants.hpp"
#include "lidstone/exactpoly.hpp"
#include "lidstone/float_families.hpp"
#include "lidstone/io.hpp"
#include "lidstone/periodic.hpp"
#include "lidstone/series.hpp"
#include "lidstone/twopoint.hpp"
#include "lidstone/verify.hpp"

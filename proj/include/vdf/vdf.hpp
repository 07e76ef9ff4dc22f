#pragma once

#include "vdf/allpass.hpp"
#include "vdf/analyzer.hpp"
#include "vdf/cdm.hpp"
#include "vdf/cost.hpp"
#include "vdf/errors.hpp"
#include "vdf/io.hpp"
#include "vdf/prototype.hpp"
#include "vdf/tuner.hpp"
#include "vdf/variable_filter.hpp"
#include "vdf/warped.hpp"

#pragma once

#include "capelli/rational.hpp"
#include "capelli/field.hpp"
#include "capelli/zpoly.hpp"
#include "capelli/weights.hpp"
#include "capelli/ops.hpp"
#include "capelli/interpolation.hpp"
#include "capelli/construct.hpp"
#include "capelli/suite.hpp"
#include "capelli/serialize.hpp"

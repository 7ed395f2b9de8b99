#pragma once

#include "polyderive/derived.hpp"
#include "polyderive/float_check.hpp"
#include "polyderive/generators.hpp"
#include "polyderive/oracle.hpp"
#include "polyderive/polygon.hpp"
#include "polyderive/regularity.hpp"
#include "polyderive/report.hpp"
#include "polyderive/scalar.hpp"
#include "polyderive/serialize.hpp"
#include "polyderive/suites.hpp"
#include "polyderive/vec3.hpp"

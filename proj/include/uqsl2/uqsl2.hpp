#pragma once

#include "uqsl2/error.hpp"
#include "uqsl2/scalars.hpp"
#include "uqsl2/matrix.hpp"
#include "uqsl2/expression.hpp"
#include "uqsl2/check.hpp"
#include "uqsl2/relations.hpp"
#include "uqsl2/identification.hpp"
#include "uqsl2/module.hpp"
#include "uqsl2/qexp.hpp"
#include "uqsl2/rotators.hpp"
#include "uqsl2/lusztig.hpp"
#include "uqsl2/serialize.hpp"
#include "uqsl2/harness.hpp"

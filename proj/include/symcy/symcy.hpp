#pragma once

#include "symcy/arith.hpp"
#include "symcy/enumerate.hpp"
#include "symcy/equivariant.hpp"
#include "symcy/error.hpp"
#include "symcy/hodge.hpp"
#include "symcy/wtypes.hpp"

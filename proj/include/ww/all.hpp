#pragma once

#include "ww/algebra.hpp"
#include "ww/cusp.hpp"
#include "ww/enumerate.hpp"
#include "ww/flags.hpp"
#include "ww/geometry.hpp"
#include "ww/hform.hpp"
#include "ww/ideal.hpp"
#include "ww/mat2.hpp"
#include "ww/order.hpp"
#include "ww/quat.hpp"
#include "ww/rational.hpp"
#include "ww/spine.hpp"
#include "ww/uhp.hpp"
#include "ww/waterworld.hpp"

#pragma once

#include "tactile/color_wheel.hpp"
#include "tactile/decode.hpp"
#include "tactile/error.hpp"
#include "tactile/geometry.hpp"
#include "tactile/heightmap.hpp"
#include "tactile/layout.hpp"
#include "tactile/manifest.hpp"
#include "tactile/pattern.hpp"
#include "tactile/study.hpp"
#include "tactile/svg.hpp"

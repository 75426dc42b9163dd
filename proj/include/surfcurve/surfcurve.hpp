#pragma once

#include "surfcurve/errors.hpp"
#include "surfcurve/rational.hpp"
#include "surfcurve/surface_map.hpp"
#include "surfcurve/srf_io.hpp"
#include "surfcurve/z2.hpp"
#include "surfcurve/schema_word.hpp"
#include "surfcurve/cut.hpp"
#include "surfcurve/curve.hpp"
#include "surfcurve/overlay.hpp"
#include "surfcurve/constructions.hpp"
#include "surfcurve/loops.hpp"
#include "surfcurve/cover.hpp"
#include "surfcurve/solver.hpp"
#include "surfcurve/oracle.hpp"
#include "surfcurve/hardness.hpp"
#include "surfcurve/json_io.hpp"
#include "surfcurve/render.hpp"

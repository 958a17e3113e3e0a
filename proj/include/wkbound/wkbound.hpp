#pragma once

#include "wkbound/airy.hpp"
#include "wkbound/bound.hpp"
#include "wkbound/errors.hpp"
#include "wkbound/io.hpp"
#include "wkbound/numerics.hpp"
#include "wkbound/numerov.hpp"
#include "wkbound/potential.hpp"
#include "wkbound/quadrature.hpp"
#include "wkbound/reference.hpp"
#include "wkbound/region_map.hpp"
#include "wkbound/report.hpp"
#include "wkbound/units.hpp"
#include "wkbound/variational.hpp"
#include "wkbound/wkb.hpp"

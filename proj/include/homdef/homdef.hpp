#pragma once

// Umbrella header for the exact Hom-algebra verification and deformation
// engine.

#include "homdef/algebra.hpp"
#include "homdef/catalog.hpp"
#include "homdef/cochain.hpp"
#include "homdef/deform.hpp"
#include "homdef/graded.hpp"
#include "homdef/hompoisson.hpp"
#include "homdef/io.hpp"
#include "homdef/linalg.hpp"
#include "homdef/rational.hpp"
#include "homdef/report.hpp"
#include "homdef/series.hpp"
#include "homdef/tensor.hpp"

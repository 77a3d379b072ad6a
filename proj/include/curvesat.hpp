#pragma once

#include "curvesat/errors.hpp"
#include "curvesat/exactla.hpp"
#include "curvesat/poly.hpp"
#include "curvesat/graded.hpp"
#include "curvesat/module.hpp"
#include "curvesat/parser.hpp"
#include "curvesat/jacobian.hpp"
#include "curvesat/saturation.hpp"
#include "curvesat/resolution.hpp"
#include "curvesat/classify.hpp"
#include "curvesat/analysis.hpp"
#include "curvesat/catalog.hpp"
#include "curvesat/report.hpp"
#include "curvesat/suite.hpp"

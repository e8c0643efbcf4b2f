#pragma once

// Umbrella header: exact and numeric tools for plane cubic curves.

#include "cubics/classify/classify.hpp"
#include "cubics/finitegeo/groups.hpp"
#include "cubics/flexsolve/fiber.hpp"
#include "cubics/flexsolve/flexes.hpp"
#include "cubics/hesse/config.hpp"
#include "cubics/hesse/normal_form.hpp"
#include "cubics/hesse/pencil.hpp"
#include "cubics/hessgroup/realize.hpp"
#include "cubics/hessgroup/table.hpp"
#include "cubics/io/cubic_text.hpp"
#include "cubics/numeric/random.hpp"
#include "cubics/poly/action.hpp"
#include "cubics/poly/hessian.hpp"
#include "cubics/poly/orbit.hpp"
#include "cubics/projective/frames.hpp"

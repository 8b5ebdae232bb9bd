// namrqed.hpp — umbrella header

#pragma once

#include "namrqed/analytic.hpp"
#include "namrqed/correlations.hpp"
#include "namrqed/dynamics.hpp"
#include "namrqed/errors.hpp"
#include "namrqed/hilbert.hpp"
#include "namrqed/model.hpp"
#include "namrqed/numerics.hpp"
#include "namrqed/run.hpp"
#include "namrqed/spectrum.hpp"

#pragma once

#include "pptball/errors.hpp"
#include "pptball/grid_oracle.hpp"
#include "pptball/linalg.hpp"
#include "pptball/montecarlo.hpp"
#include "pptball/random.hpp"
#include "pptball/report.hpp"
#include "pptball/robustness.hpp"
#include "pptball/state.hpp"
#include "pptball/upb.hpp"
#include "pptball/witness.hpp"

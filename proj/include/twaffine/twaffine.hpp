#pragma once

#include "twaffine/emit.hpp"
#include "twaffine/fourier_motzkin.hpp"
#include "twaffine/parabolic.hpp"
#include "twaffine/sampling.hpp"
#include "twaffine/shadow.hpp"
#include "twaffine/suites.hpp"

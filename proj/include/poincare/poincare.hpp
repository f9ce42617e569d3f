#pragma once

#include "poincare/actors.hpp"
#include "poincare/alpha_engine.hpp"
#include "poincare/assembler.hpp"
#include "poincare/ff/crt.hpp"
#include "poincare/ff/interpolate.hpp"
#include "poincare/ff/linear_solve.hpp"
#include "poincare/ff/prime_field.hpp"
#include "poincare/ff/sampling.hpp"
#include "poincare/fixture5.hpp"
#include "poincare/int_polynomial.hpp"
#include "poincare/pipeline.hpp"
#include "poincare/polynomial_gcd.hpp"
#include "poincare/sylvester_oracle.hpp"

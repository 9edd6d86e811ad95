#pragma once

#include "quadguess/compile.hpp"
#include "quadguess/delta2.hpp"
#include "quadguess/equation.hpp"
#include "quadguess/error.hpp"
#include "quadguess/guess.hpp"
#include "quadguess/io.hpp"
#include "quadguess/linear_form.hpp"
#include "quadguess/matrix.hpp"
#include "quadguess/oracles.hpp"
#include "quadguess/polynomial.hpp"
#include "quadguess/rational.hpp"
#include "quadguess/render.hpp"
#include "quadguess/sequence.hpp"

#pragma once

// Umbrella header: exact-arithmetic mu-bases, implicit equations, and
// rational-normal-scroll lifts of parameterized rational plane curves.

#include "acceptance.hpp"
#include "binary_form.hpp"
#include "cli.hpp"
#include "cubic_scroll.hpp"
#include "curve.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "implicitize.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "moving_line.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "resultant.hpp"
#include "rng.hpp"
#include "roots.hpp"
#include "scroll.hpp"
#include "syzygy.hpp"
#include "ternary_poly.hpp"

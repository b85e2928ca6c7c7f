#pragma once

#include "gop/rational.hpp"
#include "gop/poly.hpp"
#include "gop/ratfunc.hpp"
#include "gop/matrix.hpp"
#include "gop/linalg.hpp"
#include "gop/series.hpp"
#include "gop/weyl.hpp"
#include "gop/diffop.hpp"
#include "gop/system.hpp"
#include "gop/singular.hpp"
#include "gop/guess.hpp"
#include "gop/pade.hpp"
#include "gop/parse.hpp"
#include "gop/io.hpp"

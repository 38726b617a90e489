#pragma once

#include "cubicsq/arith.hpp"
#include "cubicsq/binsq.hpp"
#include "cubicsq/classfield.hpp"
#include "cubicsq/error.hpp"
#include "cubicsq/mordell.hpp"
#include "cubicsq/polynomial.hpp"
#include "cubicsq/purecubic.hpp"
#include "cubicsq/rational.hpp"
#include "cubicsq/real.hpp"

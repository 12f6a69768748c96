#pragma once

#include "cell.hpp"
#include "configuration.hpp"
#include "moves.hpp"
#include "pillars.hpp"
#include "potential.hpp"
#include "compactor/compactor.hpp"
#include "trace_io.hpp"
#include "oracle.hpp"

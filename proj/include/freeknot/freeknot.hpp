#pragma once

#include "freeknot/diagram.hpp"
#include "freeknot/canonical.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/parity.hpp"
#include "freeknot/smoothing.hpp"
#include "freeknot/zg.hpp"
#include "freeknot/brackets.hpp"
#include "freeknot/invertibility.hpp"

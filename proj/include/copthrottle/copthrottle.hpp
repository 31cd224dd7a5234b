#pragma once

#include "copthrottle/errors.hpp"
#include "copthrottle/graph.hpp"
#include "copthrottle/graph_io.hpp"
#include "copthrottle/distance.hpp"
#include "copthrottle/structure.hpp"
#include "copthrottle/game.hpp"
#include "copthrottle/throttling.hpp"
#include "copthrottle/lambert.hpp"
#include "copthrottle/strategy.hpp"
#include "copthrottle/chordal.hpp"
#include "copthrottle/families.hpp"
#include "copthrottle/verify.hpp"
#include "copthrottle/play.hpp"

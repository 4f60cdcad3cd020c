#pragma once

// Umbrella header. jsonio.hpp is not included here: it needs the
// vendored nlohmann/json header on the include path, which library
// consumers may not want.

#include "threehat/aux_puzzles.hpp"
#include "threehat/chain.hpp"
#include "threehat/configuration.hpp"
#include "threehat/engine.hpp"
#include "threehat/epistemic.hpp"
#include "threehat/format.hpp"
#include "threehat/inverse.hpp"
#include "threehat/outcome.hpp"
#include "threehat/seat.hpp"
#include "threehat/verify.hpp"

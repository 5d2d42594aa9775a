#pragma once

// Umbrella header: finite integer sets, exact sumsets, eventual sumset
// structure, covering certificates and the asymptotic certificate pipeline.

#include "sumcover/intset.hpp"
#include "sumcover/sumset.hpp"
#include "sumcover/structure.hpp"
#include "sumcover/construct.hpp"
#include "sumcover/cover.hpp"
#include "sumcover/asymptotic.hpp"

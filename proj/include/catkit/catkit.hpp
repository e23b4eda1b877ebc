#ifndef CATKIT_CATKIT_HPP
#define CATKIT_CATKIT_HPP

// Umbrella header: the whole workbench.
#include "catkit/bicat.hpp"
#include "catkit/core.hpp"
#include "catkit/descent.hpp"
#include "catkit/fincat.hpp"
#include "catkit/json_io.hpp"
#include "catkit/mates.hpp"
#include "catkit/present.hpp"
#include "catkit/snf.hpp"
#include "catkit/topo.hpp"
#include "catkit/zoo.hpp"

#endif

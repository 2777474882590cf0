#pragma once

#include "bgossip/analysis.hpp"
#include "bgossip/circulant.hpp"
#include "bgossip/experiments.hpp"
#include "bgossip/graph.hpp"
#include "bgossip/group.hpp"
#include "bgossip/io.hpp"
#include "bgossip/lyapunov.hpp"
#include "bgossip/moments.hpp"
#include "bgossip/msa.hpp"
#include "bgossip/parallel.hpp"
#include "bgossip/protocol.hpp"
#include "bgossip/rgg.hpp"
#include "bgossip/rng.hpp"
#include "bgossip/spectral.hpp"
#include "bgossip/trajectory.hpp"
#include "bgossip/types.hpp"

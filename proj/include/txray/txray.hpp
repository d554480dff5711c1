#pragma once

// Umbrella header.

#include "txray/chamber.hpp"
#include "txray/cutting.hpp"
#include "txray/error.hpp"
#include "txray/group.hpp"
#include "txray/json_io.hpp"
#include "txray/lattice.hpp"
#include "txray/obstruction.hpp"
#include "txray/polygon.hpp"
#include "txray/polytope3.hpp"
#include "txray/rational.hpp"
#include "txray/render.hpp"
#include "txray/scenarios.hpp"
#include "txray/version.hpp"
#include "txray/xray.hpp"

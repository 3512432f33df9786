#pragma once

#include "cdepth/bounds.hpp"
#include "cdepth/canonical.hpp"
#include "cdepth/config_io.hpp"
#include "cdepth/configuration.hpp"
#include "cdepth/depth.hpp"
#include "cdepth/error.hpp"
#include "cdepth/extract.hpp"
#include "cdepth/geometry.hpp"
#include "cdepth/octahedron.hpp"
#include "cdepth/proof_trace.hpp"
#include "cdepth/random.hpp"
#include "cdepth/rational.hpp"
#include "cdepth/render.hpp"
#include "cdepth/search.hpp"
#include "cdepth/systems.hpp"

#pragma once

// Umbrella header. The HTTP binding (explorer_http.hpp) and the CLI
// (cli.hpp) are separate because they pull in vendored dependencies.

#include "greenseq/bricks.hpp"
#include "greenseq/error.hpp"
#include "greenseq/explorer.hpp"
#include "greenseq/framed.hpp"
#include "greenseq/io.hpp"
#include "greenseq/laurent.hpp"
#include "greenseq/qseries.hpp"
#include "greenseq/quiver.hpp"
#include "greenseq/search.hpp"
#include "greenseq/transforms.hpp"

#pragma once

#include "intlen/bounds.hpp"
#include "intlen/cli/commands.hpp"
#include "intlen/cli/parse.hpp"
#include "intlen/cli/report.hpp"
#include "intlen/cli/verify.hpp"
#include "intlen/cylinder.hpp"
#include "intlen/errors.hpp"
#include "intlen/flat_torus.hpp"
#include "intlen/hyptrig.hpp"
#include "intlen/parallel.hpp"
#include "intlen/real.hpp"
#include "intlen/rng.hpp"

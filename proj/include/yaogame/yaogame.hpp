#pragma once

#include "yaogame/certify.hpp"
#include "yaogame/equalize.hpp"
#include "yaogame/errors.hpp"
#include "yaogame/game.hpp"
#include "yaogame/io.hpp"
#include "yaogame/problems.hpp"
#include "yaogame/rng.hpp"
#include "yaogame/solver.hpp"
#include "yaogame/types.hpp"
#include "yaogame/version.hpp"

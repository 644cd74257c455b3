#pragma once

#include "core.hpp"
#include "tidy.hpp"
#include "determinize.hpp"
#include "games.hpp"
#include "eval.hpp"
#include "algebra.hpp"
#include "decide.hpp"
#include "gen.hpp"
#include "io.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

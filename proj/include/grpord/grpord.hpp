#pragma once

// Umbrella header: comparison oracles for orderable groups built from Magnus
// expansions, exact Z^2 eigen-orders, and extensions along short exact
// sequences.

#include <grpord/bundle.hpp>
#include <grpord/extension.hpp>
#include <grpord/free_order.hpp>
#include <grpord/numeric.hpp>
#include <grpord/parse.hpp>
#include <grpord/quadnum.hpp>
#include <grpord/rand.hpp>
#include <grpord/rewrite.hpp>
#include <grpord/series.hpp>
#include <grpord/surface.hpp>
#include <grpord/word.hpp>
#include <grpord/zn_order.hpp>

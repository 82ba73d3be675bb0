#pragma once

// Umbrella header for the whole library.

#include "milnor/integer.hpp"
#include "milnor/links.hpp"
#include "milnor/magnus.hpp"
#include "milnor/monomial.hpp"
#include "milnor/obstruction.hpp"
#include "milnor/parse.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/series.hpp"
#include "milnor/word.hpp"

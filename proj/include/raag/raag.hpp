#pragma once

#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"
#include "raag/endo.hpp"
#include "raag/whitehead.hpp"
#include "raag/presentation.hpp"
#include "raag/factorization.hpp"

#pragma once

#include "classify.hpp"
#include "free_group.hpp"
#include "gauss_code.hpp"
#include "io.hpp"
#include "magnus.hpp"
#include "milnor.hpp"
#include "moves.hpp"
#include "suites.hpp"
#include "wtree.hpp"

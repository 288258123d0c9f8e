#pragma once

#include "gtlie/bialgebra.hpp"
#include "gtlie/classify.hpp"
#include "gtlie/cyclic_word.hpp"
#include "gtlie/errors.hpp"
#include "gtlie/formal_sum.hpp"
#include "gtlie/harness.hpp"
#include "gtlie/linking.hpp"
#include "gtlie/surface.hpp"

#pragma once

#include "netspace/errors.hpp"
#include "netspace/generator.hpp"
#include "netspace/graphspace.hpp"
#include "netspace/io.hpp"
#include "netspace/loss.hpp"
#include "netspace/ltprocess.hpp"
#include "netspace/random.hpp"
#include "netspace/solvers.hpp"
#include "netspace/verify.hpp"

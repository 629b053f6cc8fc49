#pragma once
// Umbrella header.

#include "delcap/codebook.hpp"
#include "delcap/core_math.hpp"
#include "delcap/gamma.hpp"
#include "delcap/graph.hpp"
#include "delcap/io.hpp"
#include "delcap/lcs.hpp"
#include "delcap/rng.hpp"
#include "delcap/sequence.hpp"
#include "delcap/string_gen.hpp"

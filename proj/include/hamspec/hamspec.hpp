#pragma once

#include "hamspec/numeric.hpp"
#include "hamspec/gf.hpp"
#include "hamspec/hamming.hpp"
#include "hamspec/krawtchouk.hpp"
#include "hamspec/rng.hpp"
#include "hamspec/spectral.hpp"
#include "hamspec/distances.hpp"
#include "hamspec/harness.hpp"

// Umbrella header.
#pragma once

#include "nfreg/bounds.hpp"
#include "nfreg/heights.hpp"
#include "nfreg/ideal_disc.hpp"
#include "nfreg/int_polynomial.hpp"
#include "nfreg/io.hpp"
#include "nfreg/lattice.hpp"
#include "nfreg/number_field.hpp"
#include "nfreg/numeric.hpp"
#include "nfreg/relative.hpp"
#include "nfreg/roots.hpp"
#include "nfreg/suites.hpp"
#include "nfreg/towers.hpp"
#include "nfreg/units.hpp"
#include "nfreg/verify.hpp"

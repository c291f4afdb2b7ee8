#pragma once

#include "liecontract/completeness.hpp"
#include "liecontract/contraction.hpp"
#include "liecontract/errors.hpp"
#include "liecontract/families.hpp"
#include "liecontract/invariants.hpp"
#include "liecontract/json_io.hpp"
#include "liecontract/lie_algebra.hpp"
#include "liecontract/matrix.hpp"
#include "liecontract/rational.hpp"
#include "liecontract/subspace.hpp"

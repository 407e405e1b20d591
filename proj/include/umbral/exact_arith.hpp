#pragma once

#include "umbral/errors.hpp"
#include "umbral/int.hpp"
#include "umbral/number_theory.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "partition.hpp"
#include "param_poly.hpp"
#include "symexpr.hpp"
#include "transition.hpp"
#include "symfunc.hpp"
#include "alphabet.hpp"
#include "inner_plethysm.hpp"
#include "stable.hpp"
#include "applications.hpp"
#include "render.hpp"
#include "expression.hpp"
#include "evaluator.hpp"
#include "tables.hpp"

#pragma once

#include "mutinv/dioph.hpp"
#include "mutinv/expr.hpp"
#include "mutinv/fcomposed.hpp"
#include "mutinv/finite_solve.hpp"
#include "mutinv/finite_type.hpp"
#include "mutinv/integer.hpp"
#include "mutinv/json_io.hpp"
#include "mutinv/laurent.hpp"
#include "mutinv/matrix.hpp"
#include "mutinv/mutclass.hpp"
#include "mutinv/poly.hpp"
#include "mutinv/rational_fn.hpp"
#include "mutinv/seeds.hpp"

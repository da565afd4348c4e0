#pragma once

// Exact computer algebra for the Clifford superalgebra C_n, its super Lie
// algebra, the spinor matrix representation with supertrace, and the induced
// super 3-Lie algebra, together with exhaustive/sampled identity verifiers.

#include "cnlie/basis.hpp"
#include "cnlie/brackets.hpp"
#include "cnlie/checks.hpp"
#include "cnlie/element.hpp"
#include "cnlie/errors.hpp"
#include "cnlie/expr.hpp"
#include "cnlie/json_io.hpp"
#include "cnlie/koszul.hpp"
#include "cnlie/rational.hpp"
#include "cnlie/spinor.hpp"
#include "cnlie/table.hpp"
#include "cnlie/ternary.hpp"

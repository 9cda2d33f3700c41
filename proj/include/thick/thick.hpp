#pragma once

#include "thick/dsl/eval.hpp"
#include "thick/dsl/parser.hpp"
#include "thick/dsl/render.hpp"
#include "thick/dsl/tree.hpp"
#include "thick/oracle.hpp"
#include "thick/paper_formulas.hpp"
#include "thick/projection.hpp"

#pragma once

#include "chentype/errors.hpp"
#include "chentype/symexpr/canon_form.hpp"
#include "chentype/symexpr/expr.hpp"
#include "chentype/symexpr/jet.hpp"
#include "chentype/symexpr/parse.hpp"
#include "chentype/symexpr/poly.hpp"
#include "chentype/symexpr/profile.hpp"
#include "chentype/symexpr/rational.hpp"
#include "chentype/symexpr/symbol.hpp"

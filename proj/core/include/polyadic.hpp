#pragma once

#include "polyadic/abelian_group.hpp"
#include "polyadic/algebra_laws.hpp"
#include "polyadic/bracket_tree.hpp"
#include "polyadic/brackets.hpp"
#include "polyadic/coherence.hpp"
#include "polyadic/config.hpp"
#include "polyadic/documents.hpp"
#include "polyadic/enumerate.hpp"
#include "polyadic/errors.hpp"
#include "polyadic/factor_laws.hpp"
#include "polyadic/factor_map.hpp"
#include "polyadic/graded_algebra.hpp"
#include "polyadic/groupal.hpp"
#include "polyadic/nary_core.hpp"
#include "polyadic/pos_map.hpp"
#include "polyadic/report.hpp"
#include "polyadic/scalar.hpp"
#include "polyadic/tensor_product.hpp"
#include "polyadic/toyoda.hpp"

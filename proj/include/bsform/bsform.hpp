#ifndef BSFORM_BSFORM_HPP
#define BSFORM_BSFORM_HPP

#include "bsform/coset_search.hpp"
#include "bsform/euler.hpp"
#include "bsform/factor.hpp"
#include "bsform/fixed_points.hpp"
#include "bsform/io_json.hpp"
#include "bsform/permutation.hpp"
#include "bsform/polynomial.hpp"
#include "bsform/search.hpp"
#include "bsform/seed.hpp"
#include "bsform/word.hpp"

#endif

#ifndef HK_HK_HPP
#define HK_HK_HPP

// Whole library in one include.

#include "hk/errors.hpp"
#include "hk/scalar.hpp"
#include "hk/variables.hpp"
#include "hk/polynomial.hpp"
#include "hk/text.hpp"
#include "hk/forms.hpp"
#include "hk/params.hpp"
#include "hk/specfun.hpp"
#include "hk/operators.hpp"
#include "hk/harmonics.hpp"
#include "hk/pizzetti.hpp"
#include "hk/linalg.hpp"
#include "hk/verify.hpp"

#endif  // HK_HK_HPP

#pragma once

#include "primezeta/almost_prime_zeta.hpp"
#include "primezeta/bounds.hpp"
#include "primezeta/enumerator.hpp"
#include "primezeta/numeric_context.hpp"
#include "primezeta/output.hpp"
#include "primezeta/prime_zeta.hpp"
#include "primezeta/quadrature.hpp"
#include "primezeta/real.hpp"
#include "primezeta/roots.hpp"
#include "primezeta/special_functions.hpp"
#include "primezeta/translated_sums.hpp"

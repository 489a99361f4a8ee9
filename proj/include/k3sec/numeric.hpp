#pragma once

#include <gmpxx.h>

namespace k3sec {

// Every quantity in the library is an exact integer or exact rational.
using Int = mpz_class;
using Rat = mpq_class;

}  // namespace k3sec

#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace permkit {

/// Arbitrary-precision signed integer. Ranks and element orders outgrow
/// 64 bits quickly (20! already does), so every potentially large quantity
/// in the public interface uses this type.
using Bigint = boost::multiprecision::mpz_int;

}  // namespace permkit

#pragma once

// 113-bit float for diagnostics whose cancellation outruns long double.

#include <boost/multiprecision/float128.hpp>
#include <boost/numeric/odeint.hpp>

namespace zm::detail {

using QuadReal = boost::multiprecision::float128;

}  // namespace zm::detail

// Boost 1.74 odeint walks ::value_type chains to find the scalar type, and a
// multiprecision number names itself there, which never terminates.
namespace boost::numeric::odeint::detail {
template <>
struct extract_value_type<zm::detail::QuadReal, void> {
  using type = zm::detail::QuadReal;
};
}  // namespace boost::numeric::odeint::detail

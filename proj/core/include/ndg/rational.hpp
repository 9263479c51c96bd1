#ifndef NDG_RATIONAL_HPP
#define NDG_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>

namespace ndg {

/// Exact rational arithmetic; potentials never go through floating point.
using Rational = boost::rational<long long>;

} // namespace ndg

#endif

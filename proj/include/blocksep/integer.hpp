#ifndef BLOCKSEP_INTEGER_HPP
#define BLOCKSEP_INTEGER_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace blocksep {

// Arbitrary-precision signed integer used for every coefficient and count.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace blocksep

#endif  // BLOCKSEP_INTEGER_HPP

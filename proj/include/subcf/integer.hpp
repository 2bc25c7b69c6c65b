#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace subcf {

// Arbitrary-precision signed integer. Matrix entries and fraction parts
// are unbounded everywhere in this library; there is no overflow regime.
using Integer = boost::multiprecision::cpp_int;

// floor(p / q) for q > 0. cpp_int's operator/ truncates toward zero.
Integer floor_div(const Integer& p, const Integer& q);

Integer pow10(std::uint64_t k);

}  // namespace subcf

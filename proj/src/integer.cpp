#include "subcf/integer.hpp"

namespace subcf {

Integer floor_div(const Integer& p, const Integer& q) {
    Integer quot = p / q;
    if (quot * q != p && p.sign() < 0) --quot;
    return quot;
}

Integer pow10(std::uint64_t k) {
    return boost::multiprecision::pow(Integer(10), static_cast<unsigned>(k));
}

}  // namespace subcf

#ifndef PRIVWORD_BIGINT_HPP
#define PRIVWORD_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace privword {

// Exact integer for counts that can leave the 64-bit range (q^n grows fast).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace privword

#endif

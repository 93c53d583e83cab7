#ifndef PRIVWORD_VERSION_HPP
#define PRIVWORD_VERSION_HPP

namespace privword {

inline constexpr const char* kVersion = "0.1.0";

}

#endif

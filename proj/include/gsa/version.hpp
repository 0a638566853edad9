#ifndef GSA_VERSION_HPP
#define GSA_VERSION_HPP

namespace gsa {
inline constexpr const char* kVersion = "0.1.0";
}

#endif

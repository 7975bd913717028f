#ifndef PAFORGE_VERSION_HPP
#define PAFORGE_VERSION_HPP

namespace paforge {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace paforge

#endif  // PAFORGE_VERSION_HPP
